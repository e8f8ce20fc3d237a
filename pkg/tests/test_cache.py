import json
import logging

import pytest

from snakelab import qcharacter
from snakelab.cache import CACHE_VERSION, CharacterCache, canonical_form, validate_snake_character
from snakelab.lweight import Character, Y
from snakelab.paths import PrimeSnake
from snakelab.qcharacter import snake_char

SNAKE = PrimeSnake(3, ((1, 0), (2, 3)))


@pytest.fixture
def cache(tmp_path):
    return CharacterCache(tmp_path / "cache")


def test_round_trip(cache):
    ch = snake_char(SNAKE)
    assert cache.get(SNAKE) is None
    cache.put(SNAKE, ch)
    assert cache.get(SNAKE) == ch
    assert (cache.hits, cache.misses) == (1, 1)
    assert canonical_form(SNAKE) == "3|1:0;2:3"


def test_tampered_entry_is_discarded(cache, caplog):
    cache.put(SNAKE, snake_char(SNAKE))
    path = cache.path_for(SNAKE)
    record = json.loads(path.read_text())
    record["character"][0]["mult"] = 2
    path.write_text(json.dumps(record))
    with caplog.at_level(logging.WARNING):
        assert cache.get(SNAKE) is None
    assert cache.rejected == 1
    assert not path.exists()
    assert "corrupt" in caplog.text


def test_garbage_and_truncated_files(cache):
    cache.put(SNAKE, snake_char(SNAKE))
    path = cache.path_for(SNAKE)
    path.write_text(path.read_text()[:20])
    assert cache.get(SNAKE) is None
    cache.put(SNAKE, snake_char(SNAKE))
    assert cache.get(SNAKE) == snake_char(SNAKE)


def test_consistent_digest_but_wrong_character_is_rejected(cache):
    # a well-formed record whose payload is not the snake's character
    import hashlib

    bad = Character.of(Y(3, 1, 0))
    payload = bad.to_json()
    body = json.dumps(payload, sort_keys=True, separators=(",", ":"))
    record = {
        "version": CACHE_VERSION,
        "snake": canonical_form(SNAKE),
        "digest": hashlib.sha256(body.encode()).hexdigest(),
        "character": payload,
    }
    path = cache.path_for(SNAKE)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(record))
    assert cache.get(SNAKE) is None
    assert not validate_snake_character(SNAKE, bad)


def test_version_isolation(tmp_path):
    old = CharacterCache(tmp_path, version="old")
    new = CharacterCache(tmp_path)
    old.put(SNAKE, snake_char(SNAKE))
    assert old.key(SNAKE) != new.key(SNAKE)
    assert new.get(SNAKE) is None
    # a foreign-version record under the current key is refused as well
    new.path_for(SNAKE).parent.mkdir(parents=True, exist_ok=True)
    new.path_for(SNAKE).write_text(old.path_for(SNAKE).read_text())
    assert new.get(SNAKE) is None


def test_unwritable_root_disables_cache(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("x")
    c = CharacterCache(blocker / "sub")
    assert not c.enabled
    c.put(SNAKE, snake_char(SNAKE))
    assert c.get(SNAKE) is None


def test_clear(cache):
    cache.put(SNAKE, snake_char(SNAKE))
    assert cache.clear() == 1
    assert cache.get(SNAKE) is None


def test_library_uses_installed_cache(cache):
    qcharacter.use_cache(cache)
    try:
        first = snake_char(SNAKE)
        second = snake_char(SNAKE)
    finally:
        qcharacter.use_cache(None)
    assert first == second
    assert cache.hits == 1
    assert cache.path_for(SNAKE).exists()
