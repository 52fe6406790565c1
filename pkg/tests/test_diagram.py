"""String diagrams: strand tiling checks and the ASCII rendering."""

import pytest

from agjordan.apolarity import graded_basis
from agjordan.diagram import StringDiagram, build_diagram, render_ascii
from agjordan.errors import TilingMismatch
from agjordan.hessian import GenericRankConfig, rank_table
from agjordan.jordan import EijTable, eij_table
from agjordan.poly import parse_poly


def diagram_for(text, order=None):
    b = graded_basis(parse_poly(text, var_order=order))
    eij = eij_table(rank_table(b, GenericRankConfig()))
    return build_diagram(eij, b.hilbert)


PERAZZO_ASCII = "\n".join([
    "●",
    "│",
    "● ● ● ●   ●",
    "│ │ │ │",
    "● ● ● ● ●",
    "│",
    "●",
])


def test_perazzo_cubic_diagram():
    dg = diagram_for("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v"))
    assert dg.hilbert == (1, 5, 5, 1)
    assert dg.strands == ((0, 4, 1), (1, 2, 3), (1, 1, 1), (2, 1, 1))
    assert render_ascii(dg) == PERAZZO_ASCII


def test_strands_sorted_by_start_then_longest_first():
    dg = diagram_for("x*u^3*v + y*u*v^3", ("x", "y", "u", "v"))
    starts = [s for s, _, _ in dg.strands]
    assert starts == sorted(starts)
    for (s1, l1, _), (s2, l2, _) in zip(dg.strands, dg.strands[1:]):
        if s1 == s2:
            assert l1 > l2


def test_row_dot_counts_match_hilbert():
    for text, order in [
        ("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v")),
        ("x*u^3*v + y*u*v^3", ("x", "y", "u", "v")),
        ("x^2*y^2", None),
        ("x^3 + y^3 + z^3", None),
    ]:
        dg = diagram_for(text, order)
        art = render_ascii(dg).split("\n")
        dot_rows = art[0::2]  # degree d down to 0
        counts = [row.count("●") for row in dot_rows]
        assert counts == list(reversed(dg.hilbert))


def parse_ascii(art, socle_degree):
    """Recover each column's (start, stop) degree interval from the art."""
    dot_rows = art.split("\n")[0::2]  # degree d down to 0
    width = max(len(row) for row in dot_rows)
    columns = []
    for col in range(0, width, 2):
        degrees = [
            socle_degree - r
            for r, row in enumerate(dot_rows)
            if col < len(row) and row[col] == "●"
        ]
        if degrees:
            assert degrees == list(range(max(degrees), min(degrees) - 1, -1))
            columns.append((min(degrees), max(degrees)))
    return sorted(columns)


def test_ascii_round_trips_the_strand_multiset():
    for text, order in [
        ("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v")),
        ("x*u^3*v + y*u*v^3", ("x", "y", "u", "v")),
        ("x^2*y^2", None),
    ]:
        dg = diagram_for(text, order)
        expected = sorted(
            (s, s + ln - 1)
            for s, ln, c in dg.strands
            for _ in range(c)
        )
        assert parse_ascii(render_ascii(dg), dg.socle_degree) == expected


def test_reflection_permutes_the_strand_multiset():
    # strand (start, length) mirrors to (d - start - length + 1, length)
    for text, order in [
        ("x*u^2 + y*u*v + z*v^2", ("x", "y", "z", "u", "v")),
        ("x*u^3*v + y*u*v^3", ("x", "y", "u", "v")),
        ("x^3 + y^3 + z^3", None),
    ]:
        dg = diagram_for(text, order)
        d = dg.socle_degree
        multiset = sorted((s, ln) for s, ln, c in dg.strands for _ in range(c))
        mirrored = sorted((d - s - ln + 1, ln) for s, ln in multiset)
        assert mirrored == multiset


def test_json_shape():
    dg = diagram_for("x^2 + y^2")
    assert dg.to_json() == {
        "hilbert": [1, 2, 1],
        "strands": [
            {"start": 0, "length": 3, "count": 1},
            {"start": 1, "length": 1, "count": 1},
        ],
    }


def test_tiling_rejects_wrong_cell_total():
    # drop the socle strand: totals no longer reach dim A
    eij = EijTable(socle_degree=2, e={(1, 1): 1})
    with pytest.raises(TilingMismatch):
        build_diagram(eij, (1, 2, 1))


def test_tiling_rejects_mismatched_row_coverage():
    # right total, wrong distribution over degrees
    eij = EijTable(socle_degree=2, e={(0, 3): 1, (0, 1): 1})
    with pytest.raises(TilingMismatch):
        build_diagram(eij, (1, 2, 1))


def test_tiling_requires_one_full_strand():
    eij = EijTable(socle_degree=2, e={(0, 2): 2})
    with pytest.raises(TilingMismatch):
        build_diagram(eij, (2, 2, 0))


def test_tiling_rejects_socle_degree_mismatch():
    eij = EijTable(socle_degree=3, e={(0, 4): 1})
    with pytest.raises(TilingMismatch):
        build_diagram(eij, (1, 1))


def test_length_one_strands_have_no_links():
    dg = StringDiagram(hilbert=(1, 1), strands=((0, 2, 1),))
    assert render_ascii(dg) == "●\n│\n●"
