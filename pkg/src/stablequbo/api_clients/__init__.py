from .instances import (
    FetchRecord,
    InstanceClient,
    Manifest,
    ManifestEntry,
    fetch_instances,
    sha256_of,
)

__all__ = [
    "FetchRecord",
    "InstanceClient",
    "Manifest",
    "ManifestEntry",
    "fetch_instances",
    "sha256_of",
]
