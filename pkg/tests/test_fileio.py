import pytest

from compnum import (
    Digraph,
    MalformedInputError,
    cycle,
    g_tn,
    read_digraph,
    read_edge_list,
    write_digraph,
    write_edge_list,
)


def test_edge_list_round_trip():
    for g in (cycle(4), g_tn(3, 1)):
        assert read_edge_list(write_edge_list(g)) == g


def test_edge_list_format():
    text = write_edge_list(cycle(3))
    assert text == "p 3 3\ne 1 2\ne 1 3\ne 2 3\n"


def test_read_accepts_comments_and_crlf():
    text = "c a triangle\r\np 3 3\r\ne 1 2\r\nc middle\r\ne 2 3\r\ne 1 3\r\n"
    g = read_edge_list(text)
    assert g == cycle(3)


def test_read_errors_carry_line_numbers():
    with pytest.raises(MalformedInputError, match="line 2"):
        read_edge_list("p 3 1\ne 1 4\n")
    with pytest.raises(MalformedInputError, match="line 2"):
        read_edge_list("p 3 1\ne 2 2\n")
    with pytest.raises(MalformedInputError, match="line 3"):
        read_edge_list("c x\np 2 1\nq 1 2\n")
    with pytest.raises(MalformedInputError, match="edge before p"):
        read_edge_list("e 1 2\np 3 1\n")
    with pytest.raises(MalformedInputError, match="promised"):
        read_edge_list("p 3 2\ne 1 2\n")
    with pytest.raises(MalformedInputError, match="missing p"):
        read_edge_list("c nothing here\n")


def test_digraph_round_trip():
    d = Digraph(3, [(0, 2), (1, 2)])
    text = write_digraph(d, topo=[0, 1, 2])
    assert text == "d 3 2\na 1 3\na 2 3\nc topo: 1 2 3\n"
    back, topo = read_digraph(text)
    assert back == d and topo == [0, 1, 2]


def test_digraph_without_topo():
    d = Digraph(2, [(0, 1)])
    back, topo = read_digraph(write_digraph(d))
    assert back == d and topo is None
