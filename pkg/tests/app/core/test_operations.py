"""Tests for edge classification and the linkage-minor operations."""

import unittest

from src.app.core.dto import EdgeKind, Graph, Edge, TwoLinkage
from src.app.core.errors import (
    ChordError,
    EdgeKindError,
    InvalidLinkedGraphError,
    LoopError,
    VertexNotOnPathError,
)
from src.app.core.operations import (
    build_linked_graph,
    chords,
    classify_edges,
    contract_path_edge,
    delete_rung_edge,
    is_chordless,
    left_of,
    orient,
    require_chordless,
    reverse_path,
    swap_paths,
)
from src.app.truemper.generator import generate_truemper
from tests.app.samples import disjoint_edges, one_sided_rung, with_chord


class TestClassification(unittest.TestCase):
    """classify_edges, chords and is_chordless."""

    def test_ladder_of_order_two(self) -> None:
        """
        Ü_2 的边分类。
        """
        kinds = classify_edges(generate_truemper(2))
        self.assertEqual({0: EdgeKind.PATH, 1: EdgeKind.PATH}, {k: v for k, v in kinds.items() if k < 2})
        self.assertEqual([2, 3, 4, 5], sorted(eid for eid, kind in kinds.items() if kind is EdgeKind.RUNG))
        self.assertTrue(is_chordless(generate_truemper(2)))

    def test_rung_between_paths(self) -> None:
        """
        连接两条路径的边是 rung。
        """
        g = build_linked_graph(("s1", "t1"), ("s2", "t2"), [("s1", "s2")])
        self.assertIs(EdgeKind.RUNG, classify_edges(g)[2])

    def test_chord_inside_one_path(self) -> None:
        """
        同一路径上两点之间的非路径边是 chord。
        """
        g = with_chord()
        self.assertIs(EdgeKind.CHORD, classify_edges(g)[3])
        self.assertFalse(is_chordless(g))
        self.assertEqual([3], chords(g))
        with self.assertRaises(ChordError):
            require_chordless(g)

    def test_bare_linkage_is_chordless(self) -> None:
        self.assertTrue(is_chordless(disjoint_edges()))

    def test_ladders_are_chordless(self) -> None:
        for n in range(1, 9):
            self.assertTrue(is_chordless(generate_truemper(n)), n)

    def test_classification_partitions_edges(self) -> None:
        """
        每条边恰好得到一种分类。
        """
        for g in (generate_truemper(5), with_chord(), one_sided_rung()):
            kinds = classify_edges(g)
            counts = [sum(1 for kind in kinds.values() if kind is k) for k in EdgeKind]
            self.assertEqual(len(g.edges), sum(counts))


class TestConstruction(unittest.TestCase):
    """Boundary validation of graphs and linkages."""

    def test_rejects_non_spanning(self) -> None:
        """
        linkage 必须覆盖全部顶点。
        """
        with self.assertRaises(InvalidLinkedGraphError):
            build_linked_graph(("s1", "t1"), ("s2", "t2"), [("s1", "z")])

    def test_rejects_overlapping_paths(self) -> None:
        with self.assertRaises(InvalidLinkedGraphError):
            TwoLinkage(("s1", "a"), (0,), ("a", "t2"), (1,))

    def test_rejects_loop(self) -> None:
        with self.assertRaises(InvalidLinkedGraphError):
            Graph(frozenset({"a"}), (Edge(0, "a", "a"),))

    def test_single_vertex_paths(self) -> None:
        """
        端点重合的单顶点路径是合法的。
        """
        g = build_linked_graph(("s",), ("u",), [("s", "u")])
        self.assertEqual(("s", "s", "u", "u"), g.linkage.terminals)


class TestOrder(unittest.TestCase):
    """left_of, reverse_path, swap_paths and orient."""

    def test_left_of(self) -> None:
        """
        left_of 按到 s_i 的距离比较。
        """
        g = one_sided_rung()
        self.assertTrue(left_of(g, 1, "s1", "a"))
        self.assertFalse(left_of(g, 1, "a", "a"))
        self.assertTrue(left_of(generate_truemper(4), 1, "v2", "v4"))
        with self.assertRaises(VertexNotOnPathError):
            left_of(g, 2, "s1", "a")

    def test_reverse_is_involution(self) -> None:
        """
        反转两次回到原图。
        """
        g = one_sided_rung()
        self.assertEqual(g, reverse_path(reverse_path(g, 1), 1))
        reversed_g = reverse_path(g, 1)
        self.assertEqual(("t1", "a", "s1"), reversed_g.linkage.path1)
        self.assertEqual(classify_edges(g), classify_edges(reversed_g))
        self.assertTrue(left_of(reversed_g, 1, "a", "s1"))

    def test_swap_and_orient(self) -> None:
        """
        orient 先反转再交换路径。
        """
        g = one_sided_rung()
        swapped = swap_paths(g)
        self.assertEqual(g.linkage.path2, swapped.linkage.path1)
        self.assertEqual(swapped, orient(g, swap=True))
        self.assertEqual(reverse_path(reverse_path(g, 1), 2), orient(g, True, True))


class TestMinorOperations(unittest.TestCase):
    """contract_path_edge and delete_rung_edge."""

    def test_contract_creates_parallel_rungs(self) -> None:
        """
        收缩后可能出现平行 rung。
        """
        g = contract_path_edge(generate_truemper(2), 0)
        self.assertEqual(3, len(g.vertices))
        self.assertEqual(("v1",), g.linkage.path1)
        self.assertEqual([2, 4], sorted(g.graph.edges_between("u1", "v1")))
        self.assertEqual([3, 5], sorted(g.graph.edges_between("u2", "v1")))

    def test_contract_single_path_edge(self) -> None:
        g = build_linked_graph(("s1", "a", "t1"), ("s2", "t2"))
        self.assertEqual(("s1", "t1"), contract_path_edge(g, 0).linkage.path1)

    def test_contract_everything(self) -> None:
        """
        收缩全部 path edge 后每条路径只剩一个顶点。
        """
        g = contract_path_edge(contract_path_edge(disjoint_edges(), 0), 1)
        self.assertEqual(2, len(g.vertices))
        self.assertEqual((), g.edges)

    def test_contract_rejects_rung(self) -> None:
        """
        只能收缩 path edge。
        """
        with self.assertRaises(EdgeKindError):
            contract_path_edge(generate_truemper(2), 2)

    def test_contract_rejects_loop(self) -> None:
        """
        会产生自环的收缩被拒绝。
        """
        g = build_linked_graph(("s1", "a", "t1"), ("s2", "t2"), [("s1", "a")])
        with self.assertRaises(LoopError):
            contract_path_edge(g, 0)

    def test_delete_rung(self) -> None:
        """
        删除 rung 后其他边不变。
        """
        g = delete_rung_edge(generate_truemper(2), 4)
        self.assertEqual(5, len(g.edges))
        self.assertEqual(generate_truemper(2).linkage, g.linkage)

    def test_delete_rejects_path_edge(self) -> None:
        """
        只能删除 rung。
        """
        with self.assertRaises(EdgeKindError):
            delete_rung_edge(generate_truemper(2), 0)

    def test_deleting_all_rungs_leaves_paths(self) -> None:
        """
        删除全部 rung 后只剩两条路径。
        """
        g = generate_truemper(4)
        for eid in g.rungs:
            g = delete_rung_edge(g, eid)
        self.assertEqual(set(g.linkage.edge_ids), {edge.id for edge in g.edges})

    def test_edge_ids_are_never_reused(self) -> None:
        """
        删除的边编号不会被再次分配。
        """
        g = delete_rung_edge(generate_truemper(2), 5)
        grown, ids = g.graph.with_edges((), [("v1", "u2")])
        self.assertEqual([6], ids)
        self.assertFalse(grown.has_edge(5))


if __name__ == "__main__":
    unittest.main()
