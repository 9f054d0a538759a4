import unittest

from src.app.core.isomorphism import linked_isomorphic, linked_signature, relaxed_signature
from src.app.core.operations import build_linked_graph, delete_rung_edge, orient, reverse_path
from src.app.truemper.generator import generate_truemper
from tests.app.samples import one_sided_rung


class TestLinkedIsomorphism(unittest.TestCase):
    """Strict and relaxed linked isomorphism."""

    def test_identity(self) -> None:
        """
        图与自身同构，映射为恒等。
        """
        g = generate_truemper(4)
        mapping = linked_isomorphic(g, g)
        self.assertEqual({vertex: vertex for vertex in g.vertices}, mapping)

    def test_renamed_copy(self) -> None:
        """
        重命名顶点后仍然同构，并给出对应关系。
        """
        g = one_sided_rung()
        h = build_linked_graph(("x", "y", "z"), ("p", "q"), [("x", "p")])
        self.assertEqual({"s1": "x", "a": "y", "t1": "z", "s2": "p", "t2": "q"}, linked_isomorphic(g, h))
        self.assertEqual(linked_signature(g), linked_signature(h))

    def test_reversal_is_only_relaxed(self) -> None:
        """
        反转路径后只在宽松意义下同构。
        """
        g = one_sided_rung()
        h = reverse_path(g, 1)
        self.assertIsNone(linked_isomorphic(g, h))
        self.assertIsNotNone(linked_isomorphic(g, h, relaxed=True))
        self.assertNotEqual(linked_signature(g), linked_signature(h))
        self.assertEqual(relaxed_signature(g), relaxed_signature(h))

    def test_ladder_survives_double_reversal(self) -> None:
        """
        两条路径都反转后 ladder 仍严格同构于自身。
        """
        for n in (2, 3, 4, 5):
            g = generate_truemper(n)
            self.assertIsNotNone(linked_isomorphic(g, orient(g, True, True)), n)

    def test_different_orders(self) -> None:
        self.assertIsNone(linked_isomorphic(generate_truemper(2), generate_truemper(3)))

    def test_missing_rung(self) -> None:
        g = generate_truemper(3)
        pruned = delete_rung_edge(g, g.rungs[0])
        self.assertIsNone(linked_isomorphic(g, pruned))

    def test_multiplicities_count(self) -> None:
        """
        平行 rung 的重数参与比较。
        """
        single = build_linked_graph(("s1", "t1"), ("s2", "t2"), [("s1", "s2"), ("t1", "t2")])
        double = build_linked_graph(("s1", "t1"), ("s2", "t2"), [("s1", "s2"), ("s1", "s2")])
        self.assertIsNone(linked_isomorphic(single, double))


if __name__ == "__main__":
    unittest.main()
