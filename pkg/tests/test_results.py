"""Composite result types and their arithmetic."""

from __future__ import annotations

import pytest

from ndinterp import ResultHesse, ResultPDF, ResultPolynome, ShapeMismatchError, result_scale_add
from ndinterp.results import labeled_leaves, scalar_value, tree_leaves, tree_rebuild


def test_scale_add_examples():
    assert result_scale_add(ResultHesse(1.0, 2.0, 3.0), 1.0, ResultHesse(4.0, 5.0, 6.0)) == ResultHesse(5.0, 7.0, 9.0)
    one = ResultPDF(1.0, 1.0, 1.0, 1.0)
    assert result_scale_add(one, -1.0, one) == ResultPDF(0.0, 0.0, 0.0, 0.0)
    assert ResultPolynome([1.0, 0.0, 0.0]) * 3.0 == ResultPolynome([3.0, 0.0, 0.0])


def test_plain_numbers():
    assert result_scale_add(1.0, 2.0, 3.0) == 7.0


def test_shape_mismatch():
    with pytest.raises(ShapeMismatchError):
        ResultHesse(1.0, 2.0, 3.0) + ResultPDF(1.0, 1.0, 1.0, 1.0)
    with pytest.raises(ShapeMismatchError):
        ResultPolynome([1.0, 2.0]) + ResultPolynome([1.0, 2.0, 3.0])


def test_nested_arithmetic():
    inner = ResultHesse(1.0, 2.0, 3.0)
    outer = ResultHesse(inner, inner * 2.0, inner * 3.0)
    total = outer + outer / 2.0 - (-outer)
    assert total.fpp.fp == 2.5 * 3.0 * 2.0
    assert scalar_value(total) == 2.5


def test_tree_roundtrip():
    value = ResultPDF(ResultHesse(1.0, 2.0, 3.0), ResultHesse(4.0, 5.0, 6.0), ResultHesse(7.0, 8.0, 9.0), ResultHesse(1.0, 1.0, 1.0))
    leaves = tree_leaves(value)
    assert leaves == [1, 2, 3, 4, 5, 6, 7, 8, 9, 1, 1, 1]
    assert tree_rebuild(value, iter(leaves)) == value


def test_labels():
    labels = [label for label, _ in labeled_leaves(ResultHesse(ResultHesse(0.0, 0.0, 0.0), 1.0, 2.0))]
    assert labels == [("f", "f"), ("f", "fp"), ("f", "fpp"), ("fp",), ("fpp",)]
    assert [label for label, _ in labeled_leaves(ResultPolynome([1.0, 2.0]))] == [("y0",), ("y1",)]
