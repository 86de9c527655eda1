from pathlib import Path
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """Application settings, paths and sampler defaults."""

    model_config = SettingsConfigDict(env_prefix="STABLEQUBO_")

    # project structure
    BASE_DIR: Path = Path(__file__).resolve().parent.parent
    MANIFEST_PATH: Path = BASE_DIR / "data" / "dimacs_manifest.json"
    CACHE_DIR: Path = Path.home() / ".cache" / "stablequbo"
    LOG_FILE: Path = Path("stablequbo.log")

    # sampler defaults
    DEFAULT_READS: int = 1000
    POST_READS: int = 100
    SWEEPS: int = 64
    T_HOT: float = 2.0
    T_COLD: float = 0.05

    # exact oracles
    ENUMERATION_LIMIT: int = 24
    EXHAUSTIVE_LIMIT: int = 20
    EXACT_NODE_BUDGET: int = 5_000_000

    # network access for instance downloads
    HTTP_TIMEOUT: float = 30.0

    # penalty sweep grid, comma separated rationals
    DEFAULT_BETAS: str = "1/10,1/8,1/6,1/4,1/2,1,10,100"

    # setup directory structure
    def setup_directories(self) -> None:
        """Create necessary directories, if absent."""
        self.CACHE_DIR.mkdir(parents=True, exist_ok=True)


# instantiate settings
settings = Settings()
