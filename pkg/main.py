import argparse
import json
import logging
import signal
import sys
import threading
from typing import Any, Callable, Dict, List, Optional, Sequence

from src.algebra.burau import SUPPORTED_STRANDS, burau_image
from src.algebra.laurent import CoeffRing
from src.braids.b2 import B2Word, b2_conjugate_to_yx, b2_normalize, b2_segment
from src.braids.braid import BraidWord, format_word_lines, parse_braid, read_word_file
from src.certify import fuzz
from src.certify.certificate import Certificate, check_certificate_text
from src.certify.pingpong import (NormalFormB4a, NormalFormB4b, PeriodicForm,
                                  PseudoAnosovB3, ReducibleB3, certify_b3,
                                  certify_periodic, certify_reducible_a,
                                  certify_reducible_b)
from src.config import config
from src.errors import CertificateError, StepBudgetExceeded
from src.kernel.brunnian import brunnian_report, verify_kernel
from src.kernel.examples import default_examples, example_words, named_word
from src.kernel.search import SearchConfig, kernel_search, parse_pattern

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2
EXIT_INTERNAL = 3


def setup_logging(level: Optional[str] = None) -> None:
    """Configure root logging once from the logging config section."""
    settings = config.get('logging')
    handlers: List[logging.Handler] = [logging.StreamHandler(sys.stderr)]
    if settings.get('file'):
        handlers.append(logging.FileHandler(settings['file']))
    logging.basicConfig(
        level=getattr(logging, (level or settings['level']).upper(), logging.WARNING),
        format='%(asctime)s - %(levelname)s - %(message)s',
        handlers=handlers,
        force=True,
    )


class Toolkit:
    """Runs one subcommand; SIGINT/SIGTERM ask long commands to stop early."""

    def __init__(self, args: argparse.Namespace):
        self.args = args
        self.stop = threading.Event()
        self.lock = threading.Lock()
        self.out: List[str] = []
        self._previous_handlers: Dict[int, Any] = {}

    def setup_signal_handlers(self) -> None:
        """Only possible from the main thread."""
        if threading.current_thread() is not threading.main_thread():
            return
        for sig in [signal.SIGINT, signal.SIGTERM]:
            self._previous_handlers[sig] = signal.signal(sig, self.signal_handler)

    def cleanup(self) -> None:
        for sig, handler in self._previous_handlers.items():
            signal.signal(sig, handler)
        self._previous_handlers.clear()

    def signal_handler(self, signum, frame) -> None:
        logger.warning("signal %d received, stopping after the current chunk", signum)
        self.stop.set()

    @property
    def structured(self) -> bool:
        return self.args.format == "structured"

    def emit(self, text: str) -> None:
        with self.lock:
            self.out.append(text if text.endswith("\n") else text + "\n")

    def emit_json(self, data: Any) -> None:
        self.emit(json.dumps(data, indent=2, ensure_ascii=False))

    def run(self) -> int:
        handler: Callable[[], int] = getattr(self, "cmd_" + self.args.command.replace("-", "_"))
        return handler()

    # input

    def words(self) -> List[BraidWord]:
        args = self.args
        strands = getattr(args, "n", 4)
        if args.word is not None:
            return [parse_braid(args.word, strands)]
        if args.word_file is not None:
            return read_word_file(args.word_file)
        return [named_word(args.example)]

    # subcommands

    def cmd_eval(self) -> int:
        ring = CoeffRing(self.args.mod)
        images = [(word, burau_image(word, ring)) for word in self.words()]
        if self.structured:
            data = [dict(matrix.to_dict(), letters=list(word.letters)) for word, matrix in images]
            self.emit_json(data[0] if len(data) == 1 else data)
            return EXIT_OK
        blocks = [matrix.render() if len(images) == 1 else f"# {word.to_line()}\n{matrix.render()}"
                  for word, matrix in images]
        self.emit("\n\n".join(blocks))
        return EXIT_OK

    def cmd_kernel_check(self) -> int:
        rows = [(word, verify_kernel(word, self.args.mod)) for word in self.words()]
        if self.structured:
            self.emit_json([{"n": w.strands, "letters": list(w.letters), "identity": ok} for w, ok in rows])
        elif len(rows) == 1:
            self.emit(f"identity: {'yes' if rows[0][1] else 'no'}")
        else:
            self.emit("".join(f"{w.to_line()}\tidentity: {'yes' if ok else 'no'}\n" for w, ok in rows))
        return EXIT_OK if all(ok for _, ok in rows) else EXIT_NEGATIVE

    def cmd_brunnian(self) -> int:
        pairs = [[int(s) for s in item.split(",")] for item in self.args.forget]
        reports = [brunnian_report(word, pairs) for word in self.words()]
        if self.structured:
            data = [report.to_dict() for report in reports]
            self.emit_json(data[0] if len(data) == 1 else data)
        else:
            self.emit("\n".join(report.render() for report in reports))
        return EXIT_OK

    def cmd_certify(self) -> int:
        args = self.args
        if args.check is not None:
            with open(args.check, "r") as f:
                certificate = check_certificate_text(f.read())
            self.emit(f"valid: {certificate.case} {certificate.verdict.value}")
            return EXIT_OK
        if args.case is None:
            raise ValueError("certify needs a case (periodic, b3, reducible-a, reducible-b) or --check FILE")
        certificate = self._certificate()
        if self.structured:
            self.emit_json(certificate.to_dict())
        else:
            self.emit(certificate.serialize())
        return EXIT_OK

    def _certificate(self) -> Certificate:
        args = self.args
        if args.case == "periodic":
            return certify_periodic(args.n, args.variant, args.k, args.mod)
        if args.case == "b3":
            if args.pa_word is not None:
                form = PseudoAnosovB3(parse_braid(args.pa_word, 3), args.k)
            elif args.variant is not None:
                form = PeriodicForm(3, args.variant, args.k)
            else:
                form = ReducibleB3(args.m, args.k, args.l)
            return certify_b3(form, args.mod)
        if args.case == "reducible-a":
            return certify_reducible_a(NormalFormB4a(args.k, args.l, parse_braid(args.tail, 4)), args.mod)
        return certify_reducible_b(NormalFormB4b(args.k, B2Word.parse(args.b2_word)), args.mod)

    def cmd_b2_normalize(self) -> int:
        normal = b2_normalize(B2Word.parse(self.args.b2_word))
        data: Dict[str, Any] = {"delta_exp": normal.delta_exp, "positive": normal.positive}
        if self.args.segment and "x" in normal.positive and "y" in normal.positive:
            rotated, conjugator = b2_conjugate_to_yx(normal)
            data.update(
                conjugator=conjugator.letters,
                rotated={"delta_exp": rotated.delta_exp, "positive": rotated.positive},
                moves=[],
                collected=0,
            )
            if "x" in rotated.positive and "y" in rotated.positive:
                path = b2_segment(rotated.positive)
                data.update(moves=[move.render() for move in path.moves], collected=path.delta_exp)
        if self.structured:
            self.emit_json(data)
            return EXIT_OK
        lines = [f"D^{normal.delta_exp} {normal.positive or '1'}"]
        if "moves" in data:
            lines.append(f"conjugator: {data['conjugator'] or '1'}")
            lines.append(f"rotated: D^{data['rotated']['delta_exp']} {data['rotated']['positive']}")
            lines.extend(f"move: {move}" for move in data["moves"])
            lines.append(f"collected: {data['collected']}")
        self.emit("\n".join(lines))
        return EXIT_OK

    def _fuzz_options(self) -> Dict[str, Any]:
        return {"workers": self.args.workers, "stop": self.stop, "progress": self.args.progress}

    def _finish_fuzz(self, reports: Sequence[fuzz.FuzzReport]) -> int:
        if self.structured:
            self.emit_json([
                {"suite": r.suite, "seed": r.seed, "trials": r.trials, "violations": r.violations,
                 "complete": r.complete, "examples": r.examples, "extra": dict(r.extra)}
                for r in reports
            ])
        else:
            self.emit("\n".join(report.render() for report in reports))
        return EXIT_OK if all(report.clean for report in reports) else EXIT_NEGATIVE

    def cmd_pingpong_fuzz(self) -> int:
        args = self.args
        options = self._fuzz_options()
        suites = {
            "closure": lambda: fuzz.closure_suite(args.mod, args.seed, args.trials, **options),
            "v0": lambda: fuzz.v0_suite(args.mod, args.seed, args.trials, **options),
            "disjoint": lambda: fuzz.disjointness_suite(args.mod, args.seed, args.trials, **options),
            "actions": lambda: fuzz.action_agreement_suite(args.mod, args.seed, args.trials or 1000, **options),
            "det": lambda: fuzz.det_suite(args.seed, args.trials or 1000, **options),
        }
        chosen = list(suites) if args.suite == "all" else [args.suite]
        return self._finish_fuzz([suites[name]() for name in chosen])

    def cmd_b3_faithful_fuzz(self) -> int:
        args = self.args
        report = fuzz.faithful_suite(args.seed, args.mod, args.trials, args.max_length,
                                     **self._fuzz_options())
        return self._finish_fuzz([report])

    def cmd_search(self) -> int:
        args = self.args
        cfg = SearchConfig(
            modulus=args.mod,
            max_length=args.max_length,
            strands=args.n,
            alphabet=tuple(parse_braid(args.alphabet, args.n).letters) if args.alphabet else None,
            pattern=parse_pattern(args.pattern) if args.pattern else None,
            meet_in_middle=not args.direct,
            include_trivial=args.include_trivial,
            memory_budget=args.memory_budget,
            workers=args.workers,
        )
        result = kernel_search(cfg, stop=self.stop, progress=args.progress)
        if self.structured:
            self.emit_json(result.to_dict())
        elif result.hits:
            self.emit(result.render())
        if not result.complete:
            logger.warning("search incomplete; results are partial")
        return EXIT_OK

    def cmd_examples(self) -> int:
        words = example_words()
        if self.structured:
            self.emit_json({name: {"n": w.strands, "letters": list(w.letters)} for name, w in words.items()})
            return EXIT_OK
        notes = {example.name: f"{example.note} (mod {example.modulus})" for example in default_examples()}
        out = []
        for name, word in words.items():
            comments = [name] + ([notes[name]] if name in notes else [])
            out.append(format_word_lines([word], comments))
        self.emit("".join(out))
        return EXIT_OK


def _add_input(parser: argparse.ArgumentParser, strands: bool = True) -> None:
    if strands:
        parser.add_argument("--n", type=int, choices=SUPPORTED_STRANDS, default=4, help="strand count")
    group = parser.add_mutually_exclusive_group(required=True)
    group.add_argument("--word", help="signed generator indices, e.g. \"1 -2 3\"")
    group.add_argument("--word-file", help="file of 'n: k1 k2 ...' lines")
    group.add_argument("--example", help="alpha_<k>, alpha or alpha_prime")


def _add_workers(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--workers", type=int, default=None, help="thread count (default from config)")


def _modulus(text: str) -> int:
    value = int(text)
    CoeffRing(value)
    return value


def _seed(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError("seed must be non-negative")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "structured"], default="text")
    common.add_argument("--progress", action="store_true", help="progress bars on stderr")
    common.add_argument("--log-level", default=None, help="overrides logging.level")
    common.add_argument("--config", default=None, help="alternative config.json")

    parser = argparse.ArgumentParser(
        prog="burau",
        description="Exact Burau representations of B_3 and B_4 over Z/pZ[t, t^-1]",
        parents=[common],
    )
    commands = parser.add_subparsers(dest="command", required=True)

    def command(name: str, text: str) -> argparse.ArgumentParser:
        return commands.add_parser(name, help=text, description=text, parents=[common])

    sub = command("eval", "print the Burau image of a word")
    sub.add_argument("--mod", type=_modulus, required=True)
    _add_input(sub)

    sub = command("kernel-check", "does the word have identity image mod p")
    sub.add_argument("--mod", type=_modulus, required=True)
    _add_input(sub)

    sub = command("brunnian", "forget each strand and decide the rest")
    _add_input(sub)
    sub.add_argument("--forget", action="append", default=[],
                     help="extra deletion of several strands by original label, e.g. 2,4")

    sub = command("certify", "ping-pong certificates for normal forms")
    sub.add_argument("--check", default=None, help="re-validate a serialized certificate")
    cases = sub.add_subparsers(dest="case")
    case = cases.add_parser("periodic", parents=[common])
    case.add_argument("--n", type=int, choices=SUPPORTED_STRANDS, required=True)
    case.add_argument("--variant", choices=["delta", "gamma"], required=True)
    case.add_argument("--k", type=int, required=True)
    case.add_argument("--mod", type=_modulus, required=True)
    case = cases.add_parser("b3", parents=[common])
    case.add_argument("--mod", type=_modulus, required=True)
    case.add_argument("--m", type=int, default=0)
    case.add_argument("--k", type=int, default=0)
    case.add_argument("--l", type=int, default=0)
    kind = case.add_mutually_exclusive_group()
    kind.add_argument("--pa-word", default=None, help="P in sigma_1^-1, sigma_2 starting with 2")
    kind.add_argument("--variant", choices=["delta", "gamma"], default=None)
    case = cases.add_parser("reducible-a", parents=[common])
    case.add_argument("--mod", type=_modulus, required=True)
    case.add_argument("--k", type=int, required=True)
    case.add_argument("--l", type=int, required=True)
    case.add_argument("--tail", default="", help="word in sigma_1, sigma_2")
    case = cases.add_parser("reducible-b", parents=[common])
    case.add_argument("--mod", type=_modulus, required=True)
    case.add_argument("--k", type=int, required=True)
    case.add_argument("--b2-word", default="", help="word in x y X Y")

    sub = command("b2-normalize", "D^m P normal form of an x,y-word")
    sub.add_argument("--b2-word", required=True)
    sub.add_argument("--segment", action="store_true", help="also rotate and segment P")

    sub = command("pingpong-fuzz", "closure-rule suites")
    sub.add_argument("--mod", type=_modulus, required=True)
    sub.add_argument("--seed", type=_seed, required=True)
    sub.add_argument("--trials", type=int, default=None)
    sub.add_argument("--suite", choices=["closure", "v0", "disjoint", "actions", "det", "all"],
                     default="closure")
    _add_workers(sub)

    sub = command("b3-faithful-fuzz", "identity image of random 3-braids implies trivial")
    sub.add_argument("--mod", type=_modulus, required=True)
    sub.add_argument("--seed", type=_seed, required=True)
    sub.add_argument("--trials", type=int, default=None)
    sub.add_argument("--max-length", type=int, default=None)
    _add_workers(sub)

    sub = command("search", "bounded search for identity-image words")
    sub.add_argument("--mod", type=_modulus, required=True)
    sub.add_argument("--max-length", type=int, required=True)
    sub.add_argument("--n", type=int, choices=SUPPORTED_STRANDS, default=4)
    sub.add_argument("--alphabet", default=None, help="allowed letters, e.g. \"1 -1 3\"")
    sub.add_argument("--pattern", default=None, help="cyclic letter pattern, alternatives with |")
    sub.add_argument("--direct", action="store_true", help="enumerate instead of meeting in the middle")
    sub.add_argument("--include-trivial", action="store_true")
    sub.add_argument("--memory-budget", type=int, default=None)
    _add_workers(sub)

    command("examples", "list the named kernel examples as a word file")
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    """Entry point; returns the exit status and writes results to stdout."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else EXIT_USAGE

    try:
        if args.config:
            config.load_config(args.config)
        setup_logging(args.log_level)
    except (FileNotFoundError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE

    toolkit = Toolkit(args)
    toolkit.setup_signal_handlers()
    try:
        status = toolkit.run()
    except CertificateError as e:
        print(f"internal error: {e}", file=sys.stderr)
        if e.dump:
            print(e.dump, file=sys.stderr)
        return EXIT_INTERNAL
    except StepBudgetExceeded as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_INTERNAL
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    finally:
        toolkit.cleanup()
    sys.stdout.write("".join(toolkit.out))
    return status


if __name__ == "__main__":
    sys.exit(main())
