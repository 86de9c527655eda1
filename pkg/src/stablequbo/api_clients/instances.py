"""Download and cache benchmark instances listed in a manifest.

Manifest entries may omit the SHA-256 of their file. The first download of such an entry
pins its digest in a lock file next to the cached files, and every later use is checked
against that pin.
"""

import hashlib
import json
from pathlib import Path
from types import TracebackType
from typing import Dict, List, Literal, Optional, Type

import requests
from loguru import logger
from pydantic import BaseModel, Field
from tqdm import tqdm

from stablequbo.config import settings
from stablequbo.core.errors import ChecksumMismatchError, InstanceFetchError

LOCK_FILE = "checksums.lock.json"


class ManifestEntry(BaseModel):
    name: str = Field(..., description="Instance name, also the cached file stem")
    url: str = Field(..., description="Source URL of the ASCII DIMACS file")
    sha256: Optional[str] = Field(
        None, description="Expected digest; pinned on first use when absent"
    )
    suffix: str = Field(".clq", description="File extension in the cache")


class Manifest(BaseModel):
    instances: List[ManifestEntry] = Field(default_factory=list)

    @classmethod
    def from_file(cls, path: Path) -> "Manifest":
        return cls.model_validate_json(Path(path).read_text())


class FetchRecord(BaseModel):
    name: str
    status: Literal["cached", "downloaded", "failed"]
    path: Optional[Path] = None
    sha256: Optional[str] = None
    error: Optional[str] = None


def sha256_of(data: bytes) -> str:
    return hashlib.sha256(data).hexdigest()


class InstanceClient:
    """Client for the instance mirror, with a checksum-verified local cache."""

    def __init__(
        self,
        cache_dir: Optional[Path] = None,
        offline: bool = False,
        timeout: float = settings.HTTP_TIMEOUT,
    ) -> None:
        """Initialize the client.

        Parameters
        ----------
        cache_dir : Optional[Path]
            Directory holding cached instances, ``settings.CACHE_DIR`` by default
        offline : bool
            Never touch the network; only cached files can be served
        timeout : float
            Seconds per HTTP request
        """
        self.cache_dir = Path(cache_dir or settings.CACHE_DIR)
        self.offline = offline
        self.timeout = timeout
        self.cache_dir.mkdir(parents=True, exist_ok=True)
        self.session: Optional[requests.Session] = None

    def __enter__(self) -> "InstanceClient":
        self.session = requests.Session()
        return self

    def __exit__(
        self,
        exc_type: Optional[Type[BaseException]],
        exc_val: Optional[BaseException],
        exc_tb: Optional[TracebackType],
    ) -> None:
        if self.session is not None:
            self.session.close()
            self.session = None

    @property
    def lock_path(self) -> Path:
        return self.cache_dir / LOCK_FILE

    def load_lock(self) -> Dict[str, str]:
        if not self.lock_path.exists():
            return {}
        return json.loads(self.lock_path.read_text())

    def pin(self, name: str, digest: str) -> None:
        lock = self.load_lock()
        lock[name] = digest
        self.lock_path.write_text(json.dumps(lock, indent=2, sort_keys=True) + "\n")
        logger.info(f"pinned {name} to sha256 {digest}")

    def path_for(self, entry: ManifestEntry) -> Path:
        return self.cache_dir / f"{entry.name}{entry.suffix}"

    def _download(self, entry: ManifestEntry) -> bytes:
        if self.offline:
            raise InstanceFetchError(f"{entry.name} is not cached and offline mode is on")
        getter = self.session.get if self.session is not None else requests.get
        try:
            response = getter(entry.url, timeout=self.timeout)
            response.raise_for_status()
        except requests.RequestException as e:
            raise InstanceFetchError(f"download of {entry.name} failed: {e}") from e
        return response.content

    def fetch(self, entry: ManifestEntry) -> FetchRecord:
        """Serve ``entry`` from the cache or download it, verifying its checksum.

        Raises
        ------
        ChecksumMismatchError
            The cached or downloaded file does not match the manifest or the pin
        InstanceFetchError
            The file is not cached and cannot be downloaded
        """
        path = self.path_for(entry)
        expected = entry.sha256 or self.load_lock().get(entry.name)
        if path.exists():
            data, status = path.read_bytes(), "cached"
        else:
            data, status = self._download(entry), "downloaded"
        digest = sha256_of(data)
        if expected is not None and digest != expected:
            raise ChecksumMismatchError(
                f"{entry.name}: sha256 {digest} does not match expected {expected}"
            )
        if status == "downloaded":
            tmp = path.with_suffix(path.suffix + ".part")
            tmp.write_bytes(data)
            tmp.replace(path)
            logger.info(f"downloaded {entry.name} to {path}")
        if expected is None:
            self.pin(entry.name, digest)
        return FetchRecord(name=entry.name, status=status, path=path, sha256=digest)


def fetch_instances(
    manifest_path: Optional[Path] = None,
    cache_dir: Optional[Path] = None,
    offline: bool = False,
    only: Optional[List[str]] = None,
) -> List[FetchRecord]:
    """Fetch every manifest entry (or those named in ``only``); failures are recorded."""
    manifest = Manifest.from_file(manifest_path or settings.MANIFEST_PATH)
    entries = [e for e in manifest.instances if only is None or e.name in only]
    records = []
    with InstanceClient(cache_dir, offline=offline) as client:
        for entry in tqdm(entries, desc="Fetching instances"):
            try:
                records.append(client.fetch(entry))
            except InstanceFetchError as e:
                logger.error(f"skipping {entry.name}: {e}")
                records.append(FetchRecord(name=entry.name, status="failed", error=str(e)))
    return records
