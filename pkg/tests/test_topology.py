"""Edge-list file loading, component filtering, and round-trips."""

import pytest

from degreesearch import (
    BaConfig,
    EdgeListError,
    generate_ba,
    load_edge_list,
    save_edge_list,
)


def write(tmp_path, text, name="edges.txt"):
    path = tmp_path / name
    path.write_text(text, encoding="utf-8")
    return path


def test_load_triangle_with_comment(tmp_path):
    g, idmap = load_edge_list(write(tmp_path, "0 1\n1 2\n# comment\n2 0\n"))
    assert g.node_count == 3
    assert g.adjacency == ((1, 2), (0, 2), (0, 1))
    assert idmap.external_to_internal == {"0": 0, "1": 1, "2": 2}
    assert list(idmap.internal_to_external) == ["0", "1", "2"]


def test_load_accepts_crlf_and_blank_lines(tmp_path):
    g, _ = load_edge_list(write(tmp_path, "0 1\r\n\r\n1 2\r\n"))
    assert g.node_count == 3
    assert g.edge_count == 2


def test_load_drops_duplicates_and_self_loops(tmp_path):
    g, _ = load_edge_list(write(tmp_path, "0 1\n1 0\n0 1\n2 2\n1 2\n"))
    assert g.edge_count == 2


def test_load_malformed_line_reports_position(tmp_path):
    path = write(tmp_path, "0 1\n1 2 3\n")
    with pytest.raises(EdgeListError) as exc:
        load_edge_list(path)
    assert exc.value.line_no == 2
    assert str(path) in str(exc.value)
    assert ":2:" in str(exc.value)


def test_load_empty_file_is_error(tmp_path):
    with pytest.raises(EdgeListError):
        load_edge_list(write(tmp_path, "# nothing here\n"))


def test_giant_component_kept(tmp_path):
    g, idmap = load_edge_list(write(tmp_path, "0 1\n2 3\n3 4\n"))
    assert g.node_count == 3
    assert g.edge_count == 2
    assert sorted(idmap.external_to_internal) == ["2", "3", "4"]


def test_component_size_tie_prefers_smallest_label(tmp_path):
    g, idmap = load_edge_list(write(tmp_path, "5 6\n0 1\n"))
    assert g.node_count == 2
    assert sorted(idmap.external_to_internal) == ["0", "1"]


def test_flag_off_keeps_everything(tmp_path):
    g, idmap = load_edge_list(
        write(tmp_path, "0 1\n2 3\n3 4\n"), take_giant_component=False
    )
    assert g.node_count == 5
    assert len(idmap.external_to_internal) == 5


def test_string_labels(tmp_path):
    g, idmap = load_edge_list(write(tmp_path, "a b\nb c"))
    assert g.node_count == 3
    assert g.edge_count == 2
    assert idmap.external_to_internal == {"a": 0, "b": 1, "c": 2}
    # "b" bridges the other two.
    assert g.degree(idmap.external_to_internal["b"]) == 2


def test_numeric_labels_sorted_by_value(tmp_path):
    _, idmap = load_edge_list(write(tmp_path, "10 2\n2 1\n"))
    assert list(idmap.internal_to_external) == ["1", "2", "10"]


def test_load_insensitive_to_order_and_direction(tmp_path):
    g1, m1 = load_edge_list(write(tmp_path, "0 1\n1 2\n2 0\n", "a.txt"))
    g2, m2 = load_edge_list(write(tmp_path, "2 1\n0 2\n1 0\n", "b.txt"))
    assert g1 == g2
    assert m1.external_to_internal == m2.external_to_internal


def test_save_triangle_exact_bytes(tmp_path):
    g, _ = load_edge_list(write(tmp_path, "2 0\n1 2\n0 1\n"))
    out = tmp_path / "out.txt"
    save_edge_list(g, out)
    assert out.read_text(encoding="utf-8") == "0 1\n0 2\n1 2\n"


def test_save_empty_edge_graph_writes_empty_file(tmp_path):
    from degreesearch import build_graph

    out = tmp_path / "out.txt"
    save_edge_list(build_graph([], 3), out)
    assert out.read_text(encoding="utf-8") == ""


def test_round_trip_ba_graph(tmp_path):
    g = generate_ba(BaConfig(n=1000, m_attach=3, seed_size=3, rng_seed=17))
    path = tmp_path / "ba.txt"
    save_edge_list(g, path)
    loaded, idmap = load_edge_list(path)
    assert loaded == g
    assert list(idmap.internal_to_external) == [str(i) for i in range(1000)]
