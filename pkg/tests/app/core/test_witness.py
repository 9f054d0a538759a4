import unittest

from src.app.core.dto import ContractPathEdge, DeleteRungEdge, MinorWitness
from src.app.core.errors import ChordError, WitnessReplayError
from src.app.core.operations import contract_path_edge
from src.app.core.witness import apply_witness, compose_witnesses, record_witness, simplify
from src.app.truemper.generator import generate_truemper
from tests.app.samples import one_sided_rung, with_chord


class TestRecordAndReplay(unittest.TestCase):
    """record_witness and apply_witness."""

    def setUp(self) -> None:
        self.ladder = generate_truemper(3)

    def test_replay_reproduces_result(self) -> None:
        """
        重放见证得到与记录时相同的图。
        """
        ops = [DeleteRungEdge(self.ladder.rungs[0]), ContractPathEdge(0)]
        result, witness = record_witness(self.ladder, ops)
        self.assertEqual(tuple(ops), witness.ops)
        self.assertEqual(result, apply_witness(self.ladder, witness))

    def test_vertex_map_follows_merges(self) -> None:
        """
        顶点映射跟随收缩合并。
        """
        _, witness = record_witness(one_sided_rung(), [ContractPathEdge(0)])
        self.assertEqual("s1", witness.vertex_map["a"])
        self.assertEqual("t1", witness.vertex_map["t1"])

    def test_failing_op_reports_its_index(self) -> None:
        """
        重放失败时报告出错操作的序号。
        """
        with self.assertRaises(WitnessReplayError) as ctx:
            record_witness(generate_truemper(2), [DeleteRungEdge(2), DeleteRungEdge(2)])
        self.assertEqual(1, ctx.exception.index)

    def test_mismatched_vertex_map_is_rejected(self) -> None:
        """
        记录的顶点映射与重放结果不符时报错。
        """
        witness = MinorWitness((ContractPathEdge(0),), {"s1": "s1", "a": "t1", "t1": "t1", "s2": "s2", "t2": "t2"})
        with self.assertRaises(WitnessReplayError):
            apply_witness(one_sided_rung(), witness)

    def test_unrecorded_vertex_map_skips_check(self) -> None:
        """
        没有顶点映射的见证跳过映射检查。
        """
        g = apply_witness(one_sided_rung(), MinorWitness((ContractPathEdge(0),)))
        self.assertEqual(("s1", "t1"), g.linkage.path1)

    def test_dict_form(self) -> None:
        """
        见证可以转成字典再读回。
        """
        _, witness = record_witness(self.ladder, [ContractPathEdge(0)])
        self.assertEqual(witness, MinorWitness.from_dict(witness.to_dict()))
        self.assertEqual({"op": "contract", "edge": 0}, witness.to_dict()["ops"][0])


class TestCompose(unittest.TestCase):
    def test_compose_matches_single_recording(self) -> None:
        """
        两段见证组合后与一次记录的结果一致。
        """
        g = one_sided_rung()
        middle, first = record_witness(g, [ContractPathEdge(0)])
        _, second = record_witness(middle, [ContractPathEdge(1)])
        _, whole = record_witness(g, [ContractPathEdge(0), ContractPathEdge(1)])
        composed = compose_witnesses(first, second)
        self.assertEqual(whole.ops, composed.ops)
        self.assertEqual(dict(whole.vertex_map), dict(composed.vertex_map))
        self.assertEqual("s1", composed.vertex_map["t1"])


class TestSimplify(unittest.TestCase):
    """Parallel rungs collapse to the smallest id; series vertices merge left."""

    def test_parallel_rungs(self) -> None:
        """
        平行 rung 只保留编号最小的一条。
        """
        g = contract_path_edge(generate_truemper(2), 0)
        result, witness = simplify(g)
        self.assertEqual([4, 5], witness.deletions)
        self.assertEqual([], witness.contractions)
        self.assertEqual([2, 3], sorted(result.rungs))

    def test_series_vertex(self) -> None:
        """
        度为 2 的内部顶点被收缩。
        """
        result, witness = simplify(one_sided_rung())
        self.assertEqual([0], witness.contractions)
        self.assertEqual(("s1", "t1"), result.linkage.path1)

    def test_ladder_is_already_simple(self) -> None:
        """
        ladder 化简时不需要任何操作。
        """
        for n in (3, 4, 5):
            g = generate_truemper(n)
            result, witness = simplify(g)
            self.assertEqual((), witness.ops)
            self.assertEqual(g, result)

    def test_requires_chordless(self) -> None:
        with self.assertRaises(ChordError):
            simplify(with_chord())


if __name__ == "__main__":
    unittest.main()
