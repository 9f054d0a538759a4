"""Invariant checks of the graph model, run over the exhaustive corpus."""

import unittest
from itertools import combinations, permutations

from src.app.analysis.oracle import count_spanning_linkages
from src.app.cli.document import parse_linked_graph, serialize_linked_graph
from src.app.core.dto import ContractPathEdge, DeleteRungEdge, EdgeKind, MinorOp
from src.app.core.isomorphism import linked_signature
from src.app.core.operations import apply_op, classify_edges, left_of, reverse_path
from src.app.core.witness import record_witness
from src.app.truemper.generator import generate_truemper
from src.app.truemper.pathwidth import exact_pathwidth
from src.app.xx.detector import canonical_xx
from tests.app.acceptance.corpora import ladder3_minors, small_graphs


def _all_ops(g) -> list[MinorOp]:
    kinds = classify_edges(g)
    return [
        ContractPathEdge(eid) if kind is EdgeKind.PATH else DeleteRungEdge(eid)
        for eid, kind in sorted(kinds.items())
        if kind is not EdgeKind.CHORD
    ]


class TestLinkageCounts(unittest.TestCase):
    def test_xx_has_two(self) -> None:
        """
        XX 恰好有两个 spanning linkage。
        """
        self.assertEqual(2, count_spanning_linkages(canonical_xx()))

    def test_ladders_have_one(self) -> None:
        """
        Ü_1 到 Ü_7 各自只有一个 spanning linkage。
        """
        for n in range(1, 8):
            self.assertEqual(1, count_spanning_linkages(generate_truemper(n)), n)


class TestLadderPathwidth(unittest.TestCase):
    def test_goldens(self) -> None:
        """
        Ü_1 到 Ü_7 的精确 pathwidth。
        """
        widths = [exact_pathwidth(generate_truemper(n).graph)[0] for n in range(1, 8)]
        self.assertEqual([1, 3, 3, 4, 4, 4, 4], widths)


class TestOrderPreservation(unittest.TestCase):
    """Minor scripts never swap two surviving vertices of the same path."""

    def test_short_witnesses_on_ladder3(self) -> None:
        """
        Ü_3 上所有长度不超过 4 的操作序列，保留下来的同一路径上的顶点对次序不变。
        """
        g = generate_truemper(3)
        ops = _all_ops(g)
        checked = 0
        for length in range(5):
            for script in permutations(ops, length):
                minor, witness = record_witness(g, script)
                checked += 1
                for index in (1, 2):
                    for v, w in combinations(g.linkage.path(index), 2):
                        image_v, image_w = witness.vertex_map[v], witness.vertex_map[w]
                        if image_v != image_w:
                            self.assertTrue(left_of(minor, index, image_v, image_w), script)
        self.assertEqual(3610, checked)


class TestCorpusInvariants(unittest.TestCase):
    """
    在全部 chordless 语料和 Ü_3 的 minor 上检查基本不变量。
    """

    def setUp(self) -> None:
        self.graphs = small_graphs() + ladder3_minors()

    def test_reverse_is_an_involution(self) -> None:
        """
        路径反转两次回到原图。
        """
        for g in self.graphs:
            for index in (1, 2):
                self.assertEqual(g, reverse_path(reverse_path(g, index), index))

    def test_any_two_ops_commute(self) -> None:
        """
        任意两个 minor 操作（收缩/收缩、删除/删除、收缩/删除）交换顺序结果相同。
        """
        for g in self.graphs:
            for first, second in combinations(_all_ops(g), 2):
                one = apply_op(apply_op(g, first)[0], second)[0]
                other = apply_op(apply_op(g, second)[0], first)[0]
                self.assertEqual(one, other, (first, second))

    def test_document_round_trip(self) -> None:
        """
        序列化后再解析，linked 同构类不变。
        """
        for g in self.graphs:
            self.assertEqual(linked_signature(g), linked_signature(parse_linked_graph(serialize_linked_graph(g))))

    def test_edge_kinds_partition_the_edges(self) -> None:
        """
        每条边恰好属于 path、rung 之一，且 rung 连接两条不同路径。
        """
        for g in self.graphs:
            kinds = classify_edges(g)
            self.assertEqual({edge.id for edge in g.edges}, set(kinds))
            path_edges = {eid for eid, kind in kinds.items() if kind is EdgeKind.PATH}
            self.assertEqual(set(g.linkage.edge_ids), path_edges)
            self.assertNotIn(EdgeKind.CHORD, kinds.values())
            for eid in g.rungs:
                edge = g.graph.edge(eid)
                self.assertNotEqual(g.linkage.locations[edge.u][0], g.linkage.locations[edge.v][0])


if __name__ == "__main__":
    unittest.main()
