import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from eechain import EmptySeries, IoError, SweepRow, SweepTable, emit_plot, emit_table, parse_table

INF = math.inf


def _table():
    return SweepTable(
        rows=(
            SweepRow(z=1, beta=INF, n=100, na=10, epsilon=1.0, mass=0.0,
                     entropy=2.00152345679),
            SweepRow(z=2, beta=0.5, n=100, na=10, epsilon=1.0, mass=0.25,
                     entropy=13.5),
        )
    ).sorted()


def test_csv_bytes_exact():
    data = emit_table(_table(), "csv")
    assert data == (
        b"z,beta,n,na,epsilon,mass,entropy\n"
        b"1,inf,100,10,1,0,2.00152345679\n"
        b"2,0.5,100,10,1,0.25,13.5\n"
    )


def test_json_roundtrip():
    table = _table()
    data = emit_table(table, "json")
    back = parse_table(data)
    assert back.rows[0].beta == INF
    assert [r.entropy for r in back.rows] == [r.entropy for r in table.rows]


def test_csv_roundtrip_is_byte_stable():
    table = _table()
    once = emit_table(table, "csv")
    assert emit_table(parse_table(once), "csv") == once


def test_parse_rejects_garbage():
    with pytest.raises(IoError):
        parse_table(b"nonsense,header\n1,2\n")
    with pytest.raises(IoError):
        parse_table(b"z,beta,n,na,epsilon,mass,entropy\n1,2,3\n")
    with pytest.raises(IoError):
        parse_table(b"[{\"z\": 1}]")
    with pytest.raises(IoError):
        parse_table(b"[not json")


def test_unknown_format():
    with pytest.raises(IoError):
        emit_table(_table(), "xml")


@settings(max_examples=40, deadline=None)
@given(
    st.lists(
        st.tuples(
            st.integers(1, 9),
            st.one_of(st.just(INF), st.floats(1e-6, 1e6)),
            st.integers(2, 10000),
            st.integers(1, 5000),
            st.floats(1e-3, 10.0),
            st.floats(0.0, 10.0),
            st.floats(0.0, 100.0),
        ),
        min_size=1,
        max_size=8,
    )
)
def test_roundtrip_fixpoint_property(raw):
    rows = tuple(
        SweepRow(z=a, beta=b, n=c, na=d, epsilon=e, mass=f, entropy=g)
        for a, b, c, d, e, f, g in raw
    )
    table = SweepTable(rows=rows).sorted()
    for fmt in ("csv", "json"):
        once = emit_table(table, fmt)
        again = emit_table(parse_table(once), fmt)
        assert once == again


# ---------------------------------------------------------------- plotting


def _series():
    x = np.linspace(1, 10, 20)
    return [(x, np.log(x), "log"), (x, 0.1 * x, "linear")]


def test_plot_basic_svg():
    data = emit_plot(_series(), {"xlabel": "x", "ylabel": "S", "title": "demo"})
    text = data.decode()
    assert text.startswith("<svg ")
    assert text.count("<polyline") == 2
    assert "demo" in text and ">x<" in text and ">S<" in text
    # repeated rendering is deterministic
    assert emit_plot(_series(), {"xlabel": "x", "ylabel": "S", "title": "demo"}) == data


def test_plot_reference_lines_and_log_axis():
    data = emit_plot(
        _series(),
        {"xscale": "log", "hlines": [(2.0, "bound")]},
    ).decode()
    assert "stroke-dasharray" in data
    assert "bound" in data


def test_plot_empty_gates():
    with pytest.raises(EmptySeries):
        emit_plot([])
    with pytest.raises(EmptySeries):
        emit_plot([(np.array([1.0]), np.array([2.0]), "single")])


def test_plot_log_axis_needs_positive_values():
    x = np.linspace(-1, 1, 5)
    with pytest.raises(ValueError):
        emit_plot([(x, x, "s")], {"xscale": "log"})
