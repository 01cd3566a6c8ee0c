import pytest

from qtknots.cache import ResultCache


@pytest.fixture
def cache_dir(tmp_path, monkeypatch):
    """An empty cache root; QTKNOTS_CACHE points at it."""
    root = tmp_path / "cache"
    monkeypatch.setenv("QTKNOTS_CACHE", str(root))
    return root


@pytest.fixture
def cache(cache_dir):
    return ResultCache(cache_dir, enabled=True)
