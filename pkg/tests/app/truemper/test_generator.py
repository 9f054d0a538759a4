import unittest

from src.app.core.errors import InvalidLinkedGraphError, NotTruemperShapeError
from src.app.core.isomorphism import linked_isomorphic
from src.app.truemper.generator import (
    extend_truemper,
    generate_truemper,
    shrink_truemper,
    truemper_order,
    truemper_rung,
)
from src.app.xx.detector import canonical_xx


class TestGenerateTruemper(unittest.TestCase):
    """Ladder shape and edge numbering."""

    def test_counts(self) -> None:
        """
        Ü_n 的顶点数和边数，奇数阶的中间 rung 只计一次。
        """
        for n in range(1, 9):
            g = generate_truemper(n)
            self.assertEqual(2 * n, len(g.vertices))
            # the middle rung of an odd ladder is shared by both families
            self.assertEqual(2 * (n - 1) + 2 * n - n % 2, len(g.edges), n)

    def test_small_orders(self) -> None:
        """
        小阶数 ladder 的边数。
        """
        self.assertEqual(1, len(generate_truemper(1).edges))
        self.assertEqual(6, len(generate_truemper(2).edges))
        self.assertEqual(14, len(generate_truemper(4).edges))
        self.assertEqual(17, len(generate_truemper(5).edges))

    def test_rails(self) -> None:
        """
        两条路径及其边编号。
        """
        g = generate_truemper(4)
        self.assertEqual(("v1", "v2", "v3", "v4"), g.linkage.path1)
        self.assertEqual(("u1", "u2", "u3", "u4"), g.linkage.path2)
        self.assertEqual((0, 1, 2), g.linkage.path1_edges)
        self.assertEqual((3, 4, 5), g.linkage.path2_edges)

    def test_rejects_order_zero(self) -> None:
        with self.assertRaises(InvalidLinkedGraphError):
            generate_truemper(0)


class TestTruemperRung(unittest.TestCase):
    def test_parallel_and_crossing(self) -> None:
        """
        只有平行或交叉位置上才有 rung。
        """
        self.assertIsNotNone(truemper_rung(4, 1, 1))
        self.assertIsNotNone(truemper_rung(4, 1, 4))
        self.assertIsNotNone(truemper_rung(4, 3, 2))
        self.assertIsNone(truemper_rung(4, 1, 2))

    def test_middle_rung_once(self) -> None:
        self.assertEqual(1, len(generate_truemper(5).graph.edges_between("v3", "u3")))

    def test_out_of_range(self) -> None:
        self.assertIsNone(truemper_rung(4, 0, 1))
        self.assertIsNone(truemper_rung(4, 5, 5))


class TestExtendShrink(unittest.TestCase):
    """Adding and peeling the outer layer."""

    def test_order(self) -> None:
        self.assertEqual(4, truemper_order(generate_truemper(4)))
        with self.assertRaises(NotTruemperShapeError):
            truemper_order(canonical_xx())

    def test_extend(self) -> None:
        """
        extend_truemper 得到 n + 2 阶 ladder，新端点带撇号。
        """
        for n in range(1, 7):
            extended, iso = extend_truemper(generate_truemper(n))
            self.assertEqual(n + 2, truemper_order(extended))
            self.assertEqual(2 * n + 4, len(extended.vertices))
            self.assertEqual(iso, linked_isomorphic(extended, generate_truemper(n + 2)))
            self.assertEqual("s1'", extended.linkage.s1)

    def test_double_extension(self) -> None:
        """
        连续扩展两次，端点名字不冲突。
        """
        once, _ = extend_truemper(generate_truemper(1))
        twice, _ = extend_truemper(once)
        self.assertIsNotNone(linked_isomorphic(twice, generate_truemper(5)))
        self.assertEqual("s1''", twice.linkage.s1)

    def test_extend_keeps_edge_ids(self) -> None:
        """
        扩展后原有的边编号保持不变。
        """
        g = generate_truemper(3)
        extended, _ = extend_truemper(g)
        self.assertTrue({edge.id for edge in g.edges} < {edge.id for edge in extended.edges})

    def test_shrink(self) -> None:
        """
        去掉最外层需要删除 4 条 rung、收缩 4 条 path edge。
        """
        shrunk, witness = shrink_truemper(generate_truemper(4))
        self.assertIsNotNone(linked_isomorphic(shrunk, generate_truemper(2)))
        self.assertEqual(4, len(witness.deletions))
        self.assertEqual(4, len(witness.contractions))

    def test_shrink_undoes_extend(self) -> None:
        """
        先扩展再收缩回到原来的 ladder。
        """
        for n in (1, 2, 3):
            shrunk, _ = shrink_truemper(extend_truemper(generate_truemper(n))[0])
            self.assertIsNotNone(linked_isomorphic(shrunk, generate_truemper(n)), n)

    def test_shrink_needs_order_three(self) -> None:
        with self.assertRaises(NotTruemperShapeError):
            shrink_truemper(generate_truemper(2))


if __name__ == "__main__":
    unittest.main()
