# tests/params.py
"""Shared parameter tuples (k, a, b, c, d) for the endomorphism tests."""
from __future__ import annotations

ENDO_TUPLES = [
    (1, "1", "1", "0", "0"),
    (-1, "2", "1/2", "1", "0"),
    (2, "1", "1", "0", "0"),
    (2, "1/2", "2", "1", "-1/2"),
    (-2, "3+i", "1", "-1/2", "1"),
    (3, "2", "3+i", "0", "1"),
    (-3, "1/2", "1/2", "1", "1"),
    (1, "3+i", "2", "-1/2", "-1/2"),
    (-1, "1", "3+i", "0", "1"),
    (2, "2", "1/2", "-1/2", "0"),
    (-2, "1", "2", "1", "-1/2"),
    (3, "3+i", "1", "1", "0"),
    (-3, "2", "1", "0", "-1/2"),
    (1, "1/2", "1/2", "1", "1"),
    (-1, "3+i", "3+i", "-1/2", "1"),
    (2, "1", "3+i", "0", "1"),
    (-2, "1/2", "1", "0", "0"),
    (3, "1", "2", "-1/2", "-1/2"),
    (-3, "3+i", "1/2", "1", "0"),
    (1, "2", "1", "0", "-1/2"),
    (2, "3+i", "1/2", "1", "1"),
]


def tuple_id(t) -> str:
    return "k={}_a={}_b={}_c={}_d={}".format(*t)
