from __future__ import annotations

import json
from argparse import Namespace
from pathlib import Path

import numpy as np

from src.app.analysis.oracle import find_second_linkage
from src.app.core.dto import LinkedGraph
from src.app.core.errors import ExtractionInvariantError, LinkageError, NotTruemperError
from src.app.corpus import chordless_corpus, write_corpus
from src.app.truemper.dto import TruemperCertificate
from src.app.truemper.embedding import embed_in_truemper
from src.app.truemper.generator import generate_truemper
from src.app.truemper.partition import find_valid_partition
from src.app.truemper.pathwidth import exact_pathwidth
from src.app.truemper.sampler import sample_truemper_minor
from src.app.xx.detector import has_xx_linkage_minor
from src.app.xx.extraction import extract_xx_from_second_linkage
from src.utils.logger import logger

from .base import BaseCommand, ExitCode
from .document import serialize_linked_graph
from .dot_export import render_dot
from .dto import CheckReport, LinkageView, PartitionReport, PathwidthReport


def _yes_no(flag: bool) -> str:
    return "yes" if flag else "no"


class CheckCommand(BaseCommand):
    """Decide vitality three ways and insist that the answers agree."""

    def evaluate(self, g: LinkedGraph, source: str, oracle_cap: int) -> tuple[CheckReport, TruemperCertificate | None]:
        oracle_skipped = len(g.vertices) > oracle_cap
        second = None
        vital = None
        if oracle_skipped:
            logger.warning(f"{source}: {len(g.vertices)} vertices exceed the oracle cap {oracle_cap}, oracle skipped")
        else:
            second = find_second_linkage(g, cap=oracle_cap)
            vital = second is None

        xx = has_xx_linkage_minor(g)
        extracted, extraction_ok = None, True
        if second is not None:
            try:
                extracted = extract_xx_from_second_linkage(g, second)
            except ExtractionInvariantError as exc:
                logger.error(f"{source}: extraction from the second linkage failed: {exc}")
                extraction_ok = False
        try:
            certificate = embed_in_truemper(g)
        except NotTruemperError:
            certificate = None

        xx_free = xx is None
        agree = extraction_ok and (certificate is not None) == xx_free and (vital is None or vital == xx_free)
        report = CheckReport(
            file=source,
            vital=vital,
            xx_free=xx_free,
            truemper_n=certificate.n if certificate else None,
            certificate=certificate.to_dict() if certificate else None,
            second_linkage=LinkageView(path1=list(second.path1), path2=list(second.path2)) if second else None,
            xx_witness=(extracted or xx).to_dict() if (extracted or xx) else None,
            agree=agree,
            oracle_skipped=oracle_skipped,
        )
        return report, certificate

    @staticmethod
    def describe(report: CheckReport) -> list[str]:
        vital = "skipped" if report.vital is None else _yes_no(report.vital)
        truemper = f"yes (n={report.truemper_n})" if report.truemper_n is not None else "no"
        lines = [f"vital: {vital}, xx-free: {_yes_no(report.xx_free)}, truemper: {truemper}"]
        if report.second_linkage is not None:
            lines.append("second linkage:")
            lines.append("  path1: " + " ".join(report.second_linkage.path1))
            lines.append("  path2: " + " ".join(report.second_linkage.path2))
        if not report.agree:
            lines.append("internal disagreement between the three predicates")
        return lines

    def run(self, args: Namespace) -> int:
        oracle_cap = args.oracle_cap if args.oracle_cap is not None else self.settings.oracle.vertex_cap
        batch = len(args.files) > 1
        if batch and args.dot:
            logger.warning("--dot is ignored when checking several files")
        worst = ExitCode.VITAL
        for source in args.files:
            try:
                g = self.read_graph(source)
                report, certificate = self.evaluate(g, source, oracle_cap)
            except (LinkageError, OSError) as exc:
                logger.error(f"{source}: {exc}")
                worst = max(worst, ExitCode.INPUT_ERROR)
                continue

            if args.json:
                print(report.model_dump_json())
            elif not args.quiet or not report.agree:
                for line in self.describe(report):
                    print(f"{source}: {line}" if batch else line)
            if args.dot and not batch:
                Path(args.dot).write_text(render_dot(g, certificate, Path(source).stem), encoding="utf-8")

            if not report.agree:
                logger.error(f"{source}: predicates disagree: {report.model_dump(exclude={'certificate', 'xx_witness'})}")
                code = ExitCode.DISAGREEMENT
            else:
                vital = report.vital if report.vital is not None else report.xx_free
                code = ExitCode.VITAL if vital else ExitCode.NON_VITAL
            worst = max(worst, code)
        return int(worst)


class GenerateCommand(BaseCommand):
    def run(self, args: Namespace) -> int:
        g = generate_truemper(args.n)
        self.write_output(serialize_linked_graph(g, header=f"ladder of order {args.n}"), args.out)
        if args.dot:
            Path(args.dot).write_text(render_dot(g, embed_in_truemper(g), f"ladder{args.n}"), encoding="utf-8")
        return int(ExitCode.VITAL)


class EmbedCommand(BaseCommand):
    def run(self, args: Namespace) -> int:
        g = self.read_graph(args.file)
        try:
            certificate = embed_in_truemper(g)
        except NotTruemperError as exc:
            logger.info(f"{args.file}: {exc}")
            payload = {"truemper": False, "xx_witness": exc.witness.to_dict() if exc.witness else None}
            self.write_output(json.dumps(payload, indent=2), args.out)
            return int(ExitCode.NON_VITAL if exc.witness is not None else ExitCode.DISAGREEMENT)
        self.write_output(json.dumps(certificate.to_dict(), indent=2), args.out)
        if args.dot:
            Path(args.dot).write_text(render_dot(g, certificate, Path(args.file).stem), encoding="utf-8")
        return int(ExitCode.VITAL)


class PathwidthCommand(BaseCommand):
    def run(self, args: Namespace) -> int:
        g = self.read_graph(args.file, require_chordless=False)
        width, decomposition = exact_pathwidth(g.graph)
        if args.json:
            report = PathwidthReport(file=args.file, width=width, bags=[sorted(bag) for bag in decomposition.bags])
            print(report.model_dump_json())
        else:
            print(width)
        return int(ExitCode.VITAL)


class PartitionCommand(BaseCommand):
    def run(self, args: Namespace) -> int:
        g = self.read_graph(args.file)
        partition = find_valid_partition(g)
        report = PartitionReport(
            file=args.file,
            block_a=sorted(partition.block_a) if partition else None,
            block_b=sorted(partition.block_b) if partition else None,
        )
        if args.json:
            print(report.model_dump_json())
        elif partition is None:
            print("no valid partition")
        else:
            print("A: " + " ".join(str(eid) for eid in report.block_a))
            print("B: " + " ".join(str(eid) for eid in report.block_b))
        return int(ExitCode.VITAL if partition is not None else ExitCode.NON_VITAL)


class RandomCommand(BaseCommand):
    """Random linkage minor of a ladder; always a Truemper graph."""

    def run(self, args: Namespace) -> int:
        density = args.density if args.density is not None else self.settings.random.density
        contract = (
            args.contract_probability
            if args.contract_probability is not None
            else self.settings.random.contract_probability
        )
        seed = args.seed if args.seed is not None else 0
        rng = np.random.default_rng(seed)
        g, witness = sample_truemper_minor(rng, args.n, density, contract)
        header = (
            f"random linkage minor of the ladder of order {args.n}\n"
            f"seed={seed} density={density} contract_probability={contract} ops={len(witness.ops)}"
        )
        self.write_output(serialize_linked_graph(g, header=header), args.out)
        if args.dot:
            Path(args.dot).write_text(render_dot(g, embed_in_truemper(g), f"random{seed}"), encoding="utf-8")
        return int(ExitCode.VITAL)


class CorpusCommand(BaseCommand):
    def run(self, args: Namespace) -> int:
        graphs = chordless_corpus(args.max_vertices)
        written = write_corpus(graphs, Path(args.out_dir), prefix=f"chordless{args.max_vertices}")
        logger.info(f"wrote {len(written)} documents to {args.out_dir}")
        if not args.quiet:
            print(len(written))
        return int(ExitCode.VITAL)
