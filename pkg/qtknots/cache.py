"""
Persistent on-disk cache for H̃ tables and the e_(k,n) family.

Layout under the cache root:

    macH/n=<n>          every H̃_mu with |mu| = n
    family/e_<k>_<n>    the Schur expansion of e_(k,n)

Each file starts with the CACHE_HEADER line and a "kind" line, followed by
one "mu | lam | coefficient" line (macH) or "lam | coefficient" line (family)
per nonzero Schur coefficient, in canonical text. Files are written to a
temporary sibling and renamed into place. Corrupt, truncated or
version-mismatched files are logged and ignored; the values are recomputed.
The cache only ever changes speed, never results.
"""

import logging
import os
import re
import shutil
import tempfile
from dataclasses import dataclass
from pathlib import Path
from typing import Dict, List, Optional, Tuple

from .coeff import parse_ratfunc, render
from .errors import InvalidInputError, QtKnotsError
from .hall import e_kn, e_kn_memo, seed_e_kn
from .macdonald import macH, macH_memo, satisfies_characterization, seed_macH
from .partitions import Partition, format_partition, parse_partition, partitions_of
from .settings import CACHE_HEADER
from .symfunc import SymFunc

logger = logging.getLogger(__name__)

_MACH_NAME = re.compile(r"^n=(\d+)$")
_FAMILY_NAME = re.compile(r"^e_(\d+)_(\d+)$")


class CacheFormatError(QtKnotsError):
    """A cache file could not be read back; it is skipped, never raised to the user."""


@dataclass(frozen=True)
class CacheEntry:
    path: Path
    kind: str
    size: int
    valid: bool


def _split_line(line: str, columns: int) -> List[str]:
    fields = [field.strip() for field in line.split("|")]
    if len(fields) != columns:
        raise CacheFormatError(f"expected {columns} fields, got {len(fields)}: {line!r}")
    return fields


def _read_body(path: Path, kind: str) -> List[str]:
    with open(path, "r", encoding="utf-8") as f:
        lines = [line.rstrip("\n") for line in f]
    if len(lines) < 2 or lines[0] != CACHE_HEADER:
        raise CacheFormatError(f"{path} does not start with {CACHE_HEADER!r}")
    if lines[1] != f"kind {kind}":
        raise CacheFormatError(f"{path} has kind line {lines[1]!r}, expected 'kind {kind}'")
    return [line for line in lines[2:] if line.strip()]


def parse_macH_file(path: Path, n: int) -> Dict[Partition, SymFunc]:
    """
    Read and validate a macH/n=<n> file.

    Raises:
        CacheFormatError: for a malformed file or any H̃ that fails its characterization
    """
    coeffs: Dict[Partition, Dict[Partition, object]] = {}
    try:
        for line in _read_body(path, "macH"):
            mu_text, lam_text, c_text = _split_line(line, 3)
            mu, lam = parse_partition(mu_text), parse_partition(lam_text)
            coeffs.setdefault(mu, {})[lam] = parse_ratfunc(c_text)
    except (OSError, InvalidInputError) as e:
        raise CacheFormatError(f"cannot read {path}: {e}") from e

    if set(coeffs) != set(partitions_of(n)):
        raise CacheFormatError(f"{path} does not hold every partition of {n}")
    values = {}
    for mu, table in coeffs.items():
        value = SymFunc(table)
        if not satisfies_characterization(mu, value):
            raise CacheFormatError(f"{path}: stored H̃_{mu} fails the Macdonald characterization")
        values[mu] = value
    return values


def parse_family_file(path: Path, n: int) -> SymFunc:
    """Read an e_<k>_<n> file; the value must be homogeneous of degree n."""
    coeffs = {}
    try:
        for line in _read_body(path, "family"):
            lam_text, c_text = _split_line(line, 2)
            coeffs[parse_partition(lam_text)] = parse_ratfunc(c_text)
    except (OSError, InvalidInputError) as e:
        raise CacheFormatError(f"cannot read {path}: {e}") from e
    value = SymFunc(coeffs)
    if not value or not value.is_homogeneous() or value.degree != n:
        raise CacheFormatError(f"{path} is not homogeneous of degree {n}")
    return value


class ResultCache:
    """
    The persistent cache rooted at one directory.

    A disabled cache (``--no-cache``) accepts every call and touches nothing.
    """

    def __init__(self, root: Path, enabled: bool = True):
        self.root = Path(root)
        self.enabled = enabled
        self.stats = {
            "loaded": 0,
            "written": 0,
            "ignored": 0,
        }

    def macH_path(self, n: int) -> Path:
        return self.root / "macH" / f"n={n}"

    def family_path(self, k: int, n: int) -> Path:
        return self.root / "family" / f"e_{k}_{n}"

    # --- writing ---

    def _publish(self, path: Path, lines: List[str]) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        fd, tmp_name = tempfile.mkstemp(prefix=f".{path.name}.", dir=path.parent)
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as f:
                f.write("\n".join(lines) + "\n")
            os.replace(tmp_name, path)
        except OSError:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
        self.stats["written"] += 1
        logger.debug("cache: wrote %s", path)

    def store_macH(self, n: int, values: Dict[Partition, SymFunc]) -> None:
        if not self.enabled:
            return
        lines = [CACHE_HEADER, "kind macH"]
        for mu in partitions_of(n):
            for lam in values[mu].support():
                lines.append(f"{format_partition(mu)} | {format_partition(lam)} | {render(values[mu].coefficient(lam))}")
        self._publish(self.macH_path(n), lines)

    def store_family(self, k: int, n: int, value: SymFunc) -> None:
        if not self.enabled:
            return
        lines = [CACHE_HEADER, "kind family"]
        for lam in value.support():
            lines.append(f"{format_partition(lam)} | {render(value.coefficient(lam))}")
        self._publish(self.family_path(k, n), lines)

    # --- reading ---

    def load_macH(self, n: int) -> Optional[Dict[Partition, SymFunc]]:
        path = self.macH_path(n)
        if not self.enabled or not path.is_file():
            logger.debug("cache: miss for %s", path)
            return None
        try:
            values = parse_macH_file(path, n)
        except CacheFormatError as e:
            self.stats["ignored"] += 1
            logger.warning("ignoring cache file: %s", e)
            return None
        self.stats["loaded"] += 1
        logger.debug("cache: hit for %s", path)
        return values

    def load_family(self, k: int, n: int) -> Optional[SymFunc]:
        path = self.family_path(k, n)
        if not self.enabled or not path.is_file():
            logger.debug("cache: miss for %s", path)
            return None
        try:
            value = parse_family_file(path, n)
        except CacheFormatError as e:
            self.stats["ignored"] += 1
            logger.warning("ignoring cache file: %s", e)
            return None
        self.stats["loaded"] += 1
        logger.debug("cache: hit for %s", path)
        return value

    def _listing(self) -> List[Tuple[str, Path, Tuple[int, ...]]]:
        found = []
        for path in sorted((self.root / "macH").glob("n=*")):
            match = _MACH_NAME.match(path.name)
            if match:
                found.append(("macH", path, (int(match.group(1)),)))
        for path in sorted((self.root / "family").glob("e_*")):
            match = _FAMILY_NAME.match(path.name)
            if match:
                found.append(("family", path, (int(match.group(1)), int(match.group(2)))))
        return found

    def seed_all(self) -> int:
        """Install every valid cached value into the in-process memos; returns the file count."""
        if not self.enabled:
            return 0
        count = 0
        for kind, _path, key in self._listing():
            if kind == "macH":
                values = self.load_macH(*key)
                if values is None:
                    continue
                for mu, value in values.items():
                    seed_macH(mu, value)
            else:
                value = self.load_family(*key)
                if value is None:
                    continue
                seed_e_kn(key[0], key[1], value)
            count += 1
        return count

    def persist(self) -> int:
        """Write every complete H̃ degree and every family member computed this run that is not on disk yet."""
        if not self.enabled:
            return 0
        written = 0
        memo = macH_memo()
        degrees = {mu.size for mu in memo if mu}
        for n in sorted(degrees):
            if self.macH_path(n).is_file():
                continue
            if all(mu in memo for mu in partitions_of(n)):
                self.store_macH(n, {mu: memo[mu] for mu in partitions_of(n)})
                written += 1
        for (k, n), value in sorted(e_kn_memo().items()):
            if not self.family_path(k, n).is_file():
                self.store_family(k, n, value)
                written += 1
        return written

    # --- maintenance ---

    def info(self) -> List[CacheEntry]:
        entries = []
        for kind, path, key in self._listing():
            try:
                if kind == "macH":
                    parse_macH_file(path, *key)
                else:
                    parse_family_file(path, key[1])
                valid = True
            except CacheFormatError:
                valid = False
            entries.append(CacheEntry(path, kind, path.stat().st_size, valid))
        return entries

    def clear(self) -> int:
        """Remove the macH and family trees; returns the number of files removed."""
        removed = len(self._listing())
        for sub in ("macH", "family"):
            target = self.root / sub
            if target.is_dir():
                shutil.rmtree(target)
        logger.debug("cache: cleared %d files under %s", removed, self.root)
        return removed

    def warm(self, max_n: int, families: Tuple[Tuple[int, int], ...] = ()) -> int:
        """Compute and store H̃ tables for n = 1..max_n and the requested e_(k,n)."""
        if max_n < 1:
            raise InvalidInputError(f"cache warm needs --max-n >= 1, got {max_n}")
        self.seed_all()
        for n in range(1, max_n + 1):
            for mu in partitions_of(n):
                macH(mu)
        for k, n in families:
            e_kn(k, n)
        return self.persist()
