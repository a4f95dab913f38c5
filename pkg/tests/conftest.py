from __future__ import annotations

import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from snqam import default_lexicon_dir, load_lexicons


@pytest.fixture(scope="session")
def lexicon_dir() -> Path:
    return default_lexicon_dir()


@pytest.fixture(scope="session")
def lex(lexicon_dir):
    return load_lexicons(lexicon_dir)


def make_lexicon_dir(base: Path, **files: str) -> Path:
    """Write a throwaway lexicon directory; segmentation gets a default."""
    base.mkdir(parents=True, exist_ok=True)
    if "segmentation.txt" not in files:
        files["segmentation.txt"] = "我们\n的\n高铁\n"
    for name, content in files.items():
        (base / name).write_text(content, encoding="utf-8")
    return base
