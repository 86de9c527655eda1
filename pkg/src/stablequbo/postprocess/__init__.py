from .procedure import (
    Recomputation,
    extract_stable_set,
    post_process,
    recompute_components,
    screen,
)

__all__ = [
    "Recomputation",
    "extract_stable_set",
    "post_process",
    "recompute_components",
    "screen",
]
