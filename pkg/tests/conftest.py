"""Golden reference tables shared across the test suite."""

from __future__ import annotations

import csv
from pathlib import Path

import pytest

DATA_DIR = Path(__file__).resolve().parent.parent / "data"

INT_FIELDS = {"cd", "pos_cd", "c", "sc", "h", "pos_h", "h_star", "pos_v"}
REAL_FIELDS = {"c_p", "v_rate", "v_p", "v_index", "ratio"}


def load_golden(name: str) -> list[dict]:
    rows = []
    with open(DATA_DIR / name, newline="", encoding="utf-8") as handle:
        for record in csv.DictReader(handle):
            row: dict[str, object] = {}
            for key, value in record.items():
                if key in INT_FIELDS:
                    row[key] = int(value)
                elif key in REAL_FIELDS:
                    row[key] = float(value)
                else:
                    row[key] = value
            rows.append(row)
    return rows


@pytest.fixture(scope="session")
def author_table() -> list[dict]:
    """Top-25 authors by v-index, 2011 DBLP snapshot; includes h_star."""
    return load_golden("authors_top25.csv")


@pytest.fixture(scope="session")
def journal_table() -> list[dict]:
    """Top-25 journals by v-index, 2011 Scopus/SCImago snapshot."""
    return load_golden("journals_top25.csv")


@pytest.fixture(scope="session")
def country_table() -> list[dict]:
    """Top-25 countries by v-index, 2011 SCImago snapshot."""
    return load_golden("countries_top25.csv")
