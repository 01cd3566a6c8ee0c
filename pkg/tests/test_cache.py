import pytest

from qtknots.cache import CacheFormatError, ResultCache, parse_family_file, parse_macH_file
from qtknots.coeff import q
from qtknots.errors import InvalidInputError
from qtknots.hall import e_kn
from qtknots.macdonald import macH
from qtknots.partitions import Partition, partitions_of
from qtknots.settings import CACHE_HEADER
from qtknots.symfunc import s


def _macH_table(n):
    return {mu: macH(mu) for mu in partitions_of(n)}


class TestFiles:
    def test_macH_round_trip(self, cache):
        cache.store_macH(3, _macH_table(3))
        path = cache.macH_path(3)
        assert path.read_text(encoding="utf-8").splitlines()[:2] == [CACHE_HEADER, "kind macH"]
        assert cache.load_macH(3) == _macH_table(3)
        assert cache.stats["loaded"] == 1

    def test_family_round_trip(self, cache):
        cache.store_family(2, 2, e_kn(2, 2))
        assert parse_family_file(cache.family_path(2, 2), 2) == e_kn(2, 2)

    def test_wrong_header_is_ignored(self, cache):
        path = cache.macH_path(2)
        path.parent.mkdir(parents=True)
        path.write_text("QTKNOTS-CACHE v0\nkind macH\n", encoding="utf-8")
        assert cache.load_macH(2) is None
        assert cache.stats["ignored"] == 1

    def test_tampered_value_is_rejected(self, cache):
        table = _macH_table(2)
        table[Partition((2,))] = s(2) + s(1, 1).scale(q + 1)
        cache.store_macH(2, table)
        with pytest.raises(CacheFormatError):
            parse_macH_file(cache.macH_path(2), 2)
        assert cache.load_macH(2) is None

    def test_incomplete_table_is_rejected(self, cache):
        path = cache.macH_path(2)
        path.parent.mkdir(parents=True)
        path.write_text(f"{CACHE_HEADER}\nkind macH\n2 | 2 | 1\n2 | 1,1 | q\n", encoding="utf-8")
        with pytest.raises(CacheFormatError):
            parse_macH_file(path, 2)

    def test_family_degree_is_checked(self, cache):
        cache.store_family(2, 2, e_kn(2, 2))
        with pytest.raises(CacheFormatError):
            parse_family_file(cache.family_path(2, 2), 3)


class TestLifecycle:
    def test_persist_then_seed(self, cache):
        _macH_table(2)
        e_kn(2, 2)
        assert cache.persist() >= 2
        assert cache.macH_path(2).is_file()
        assert cache.family_path(2, 2).is_file()
        assert ResultCache(cache.root).seed_all() >= 2

    def test_persist_skips_existing_files(self, cache):
        _macH_table(2)
        cache.persist()
        before = cache.macH_path(2).stat().st_mtime_ns
        assert cache.persist() == 0
        assert cache.macH_path(2).stat().st_mtime_ns == before

    def test_info_and_clear(self, cache):
        cache.store_macH(2, _macH_table(2))
        cache.store_family(2, 2, e_kn(2, 2))
        entries = cache.info()
        assert {(entry.kind, entry.valid) for entry in entries} == {("macH", True), ("family", True)}
        assert cache.clear() == 2
        assert cache.info() == []

    def test_warm(self, cache):
        assert cache.warm(2) >= 1
        assert cache.macH_path(1).is_file() and cache.macH_path(2).is_file()

    def test_warm_rejects_zero(self, cache):
        with pytest.raises(InvalidInputError):
            cache.warm(0)

    def test_disabled_cache_touches_nothing(self, tmp_path):
        cache = ResultCache(tmp_path / "off", enabled=False)
        _macH_table(2)
        assert cache.seed_all() == 0
        assert cache.persist() == 0
        assert not (tmp_path / "off").exists()

