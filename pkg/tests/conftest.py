"""Shared fixtures: catalog entries and per-entry cached derived data."""

from __future__ import annotations

import pytest

from qhakit.catalog import builtin
from qhakit.drinfeld import compute_drinfeld_data
from qhakit.structures import QuasiTriangularQHA

ENTRY_NAMES = ("trivial", "group_z3", "z2_triangular", "sweedler_h4", "semion")
QT_NAMES = ("trivial", "z2_triangular", "sweedler_h4", "semion")

_entries = {}
_drinfeld = {}


def entry(name):
    if name not in _entries:
        _entries[name] = builtin(name)
    return _entries[name]


def hopf(name):
    s = entry(name).structure
    return s.qha if isinstance(s, QuasiTriangularQHA) else s


def drinfeld_data(name):
    if name not in _drinfeld:
        _drinfeld[name] = compute_drinfeld_data(hopf(name))
    return _drinfeld[name]


@pytest.fixture(params=ENTRY_NAMES)
def any_entry(request):
    return entry(request.param)


@pytest.fixture(params=QT_NAMES)
def qt_entry(request):
    return entry(request.param)
