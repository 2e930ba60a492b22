"""Command-line entry point: ``wadgelab <subcommand> ...``.

Exit status 0 means success, 1 a failed check or violation, 2 a usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from pathlib import Path

from . import formats
from .annuli import RadiusLadder, classify_radius, extract_walk, check_extraction, smallest_open_interval
from .errors import ConsistencyViolation, FormatError, Infeasible, WadgeLabError
from .graphs import build_Gn, validate_reduction
from .oracles import LEMMAS, Bounds, Campaign, run_campaign
from .product import coverage_report
from .render import render_annuli
from .sequences import DeltaSequence, delta, e_tail_check, generate_inequivalent_family
from .unfoldings import Case, base_unfolding, enumerate_unfoldings, enumerated_coverage, extend_unfolding


class UsageError(Exception):
    def __init__(self, flag: str, message: str):
        super().__init__(f"{flag}: {message}")
        self.flag = flag


def _seq_option(p, name: str, help_: str):
    p.add_argument(f"--{name}", help=f"{help_} (inline, e.g. \"0 1 3 6\")")
    p.add_argument(f"--{name}-file", help=f"{help_} (first sequence of a file)")


def _get_seq(args, name: str, required: bool = True):
    inline = getattr(args, name.replace("-", "_"))
    path = getattr(args, f"{name}_file".replace("-", "_"))
    if inline is not None and path is not None:
        raise UsageError(f"--{name}", f"give either --{name} or --{name}-file, not both")
    if inline is not None:
        try:
            return formats.parse_sequence(inline)
        except FormatError as exc:
            raise UsageError(f"--{name}", str(exc)) from None
    if path is not None:
        seqs = formats.parse_sequences(_read(path, f"--{name}-file"))
        if not seqs:
            raise UsageError(f"--{name}-file", "no sequence in file")
        return seqs[0]
    if required:
        raise UsageError(f"--{name}", "missing")
    return None


def _read(path: str, flag: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise UsageError(flag, f"cannot read {path}: {exc.strerror}") from None


def _ladder(args) -> RadiusLadder:
    if args.ladder and args.rungs:
        raise UsageError("--ladder", "give either --ladder or --rungs, not both")
    if args.ladder:
        return formats.parse_ladder(_read(args.ladder, "--ladder"))
    if args.rungs:
        rungs = [Fraction(t) for t in args.rungs.split()]
        outer = Fraction(args.outer) if args.outer else rungs[-1] + 1
        return RadiusLadder(outer, rungs)
    raise UsageError("--ladder", "missing (or use --rungs)")


def _ladder_options(p):
    p.add_argument("--ladder", help="ladder file")
    p.add_argument("--rungs", help="inline rungs, e.g. \"0 1 2 3\"")
    p.add_argument("--outer", help="outer radius for --rungs (default last rung + 1)")


def _write(text: str, out: str | None):
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


# subcommands

def cmd_graph(args) -> int:
    g = build_Gn(_get_seq(args, "seq"), args.hi)
    _write(formats.dump_graph(g), args.output)
    return 0


def cmd_validate(args) -> int:
    text = _read(args.file, "file")
    head = text.lstrip().split(None, 1)[0] if text.strip() else ""
    if head == "reduction":
        rep = validate_reduction(formats.parse_reduction(text))
        print(rep)
        return 0 if rep.ok else 1
    if head == "unfolding":
        x = formats.parse_unfolding(text)
        rf, rg = x.validate()
        print(f"f: {rf}")
        print(f"g: {rg}")
        return 0 if rf.ok and rg.ok else 1
    raise UsageError("file", "expected a 'reduction' or 'unfolding' file")


def cmd_enumerate(args) -> int:
    m, n = _get_seq(args, "m"), _get_seq(args, "n")
    count = 0
    for x in enumerate_unfoldings(m, n, args.seed_l, args.max_domain, args.forbid_t,
                                  hi_m=args.hi_m, hi_n=args.hi_n):
        count += 1
        if args.limit is None or count <= args.limit:
            if args.dump:
                print(formats.dump_unfolding(x), end="")
            else:
                w = x.walk
                print(" ".join(f"{a}:{b}" for a, b in w.vertices), "|",
                      " ".join(f"{a}:{b}" for a, b in w.edges))
    print(f"unfoldings={count}")
    return 0


def cmd_coverage(args) -> int:
    m, n = _get_seq(args, "m"), _get_seq(args, "n")
    rep = coverage_report(m, n, args.l, args.forbid_t, hi_m=args.hi_m, hi_n=args.hi_n,
                          forbid_g_vertex=args.forbid_g)
    print(rep)
    if not args.oracle:
        return 0
    cov = enumerated_coverage(m, n, args.l, args.max_domain, args.forbid_t, hi_m=args.hi_m, hi_n=args.hi_n)
    shown = f"[{min(cov)},{max(cov)}]" if cov else "[]"
    forbid = "-" if args.forbid_t is None else args.forbid_t
    print(f"oracle m={','.join(map(str, m))} n={','.join(map(str, n))} l={args.l} forbid={forbid} "
          f"hi={rep.hi_m} max-domain={args.max_domain} -> {shown}")
    return 0 if cov == rep.vertices else 1


def cmd_extend(args) -> int:
    if args.unfolding:
        x = formats.parse_unfolding(_read(args.unfolding, "--unfolding"))
    else:
        x = base_unfolding(_get_seq(args, "m"), _get_seq(args, "n"), args.seed_l, args.hi_m, args.hi_n)
    y = extend_unfolding(x, args.k, args.l, Case(args.case))
    _write(formats.dump_unfolding(y), args.output)
    return 0 if y.valid else 1


def cmd_classify(args) -> int:
    ladder, seq = _ladder(args), _get_seq(args, "seq")
    for tok in args.r:
        r = Fraction(tok)
        label = classify_radius(ladder, seq, r)
        try:
            small = smallest_open_interval(ladder, r)
        except WadgeLabError:
            small = None
        print(f"r={r} {label}" + (f" smallest=({small[0]},{small[1]})" if small else ""))
    return 0


def cmd_profile(args) -> int:
    m, n = _get_seq(args, "m"), _get_seq(args, "n")
    alpha = _ladder(args)
    beta = formats.parse_ladder(_read(args.beta_ladder, "--beta-ladder")) if args.beta_ladder else None
    profile = formats.parse_profile(_read(args.file, "file"))
    try:
        ex = extract_walk(profile, m, n, alpha, beta)
    except ConsistencyViolation as exc:
        print(f"consistency violation at parameter {exc.parameter}: {exc.alpha_label} vs {exc.beta_label}")
        return 1
    for p, ea, eb in ex.transitions:
        print(f"at {p}: {ea} ~ {eb}")
    print("walk " + " ".join(f"{a}:{b}" for a, b in ex.walk.vertices))
    problems = check_extraction(ex)
    print("valid" if not problems else "\n".join(problems))
    if args.dump:
        _write(formats.dump_unfolding(ex.unfolding), args.dump)
    return 0 if not problems else 1


def cmd_render(args) -> int:
    doc = render_annuli(_ladder(args), _get_seq(args, "seq"), args.hi_block, args.format)
    _write(doc, args.output)
    return 0


def cmd_etail(args) -> int:
    def get(flag, val):
        try:
            vals = [int(t) for t in val.replace(",", " ").split()]
            if args.index_sequences:
                return delta(formats.parse_sequence(val))
            return DeltaSequence(vals)
        except (ValueError, FormatError) as exc:
            raise UsageError(flag, str(exc)) from None
    a, b = get("--a", args.a), get("--b", args.b)
    if args.min_overlap < 1:
        raise UsageError("--min-overlap", "must be at least 1")
    print(e_tail_check(a, b, args.max_shift, args.min_overlap))
    return 0


def cmd_family(args) -> int:
    try:
        fam = generate_inequivalent_family(args.count, args.length)
    except Infeasible as exc:
        print(f"infeasible: {exc} (maximum {exc.maximum})")
        return 1
    except ValueError as exc:
        raise UsageError("--count/--length", str(exc)) from None
    print(formats.dump_sequences(fam), end="")
    return 0


def cmd_campaign(args) -> int:
    pairs = []
    if args.corpus:
        pairs += formats.parse_corpus(_read(args.corpus, "--corpus"))
    for p in args.pair or []:
        if "|" not in p:
            raise UsageError("--pair", "expected \"m | n\"")
        a, b = p.split("|", 1)
        pairs.append((formats.parse_sequence(a), formats.parse_sequence(b)))
    if not pairs:
        raise UsageError("--corpus", "missing (or use --pair)")
    bounds = Bounds(max_domain=args.max_domain, hi=args.hi, max_shift=args.max_shift,
                    min_overlap=args.min_overlap, seed_arrows=args.seed_arrows)
    report = run_campaign(Campaign(args.lemma, pairs, bounds), args.workers, args.only)
    print(report)
    return 0 if report.ok else 1


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wadgelab", description=__doc__.splitlines()[0])
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", help="build and dump the colored graph of a sequence")
    _seq_option(p, "seq", "index sequence")
    p.add_argument("--hi", type=int, help="truncation (default 2*last-1)")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_graph)

    p = sub.add_parser("validate", help="validate a reduction or unfolding file")
    p.add_argument("file")
    p.set_defaults(func=cmd_validate)

    def pair_opts(p):
        _seq_option(p, "m", "sequence m")
        _seq_option(p, "n", "sequence n")
        p.add_argument("--hi-m", type=int)
        p.add_argument("--hi-n", type=int)

    p = sub.add_parser("enumerate", help="list unfoldings through (0, l)")
    pair_opts(p)
    p.add_argument("--max-domain", type=int, required=True)
    p.add_argument("--seed-l", type=int, required=True)
    p.add_argument("--forbid-t", type=int)
    p.add_argument("--limit", type=int, help="print at most this many (all are counted)")
    p.add_argument("--dump", action="store_true", help="print full dumps instead of walks")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("coverage", help="union of ran(f) over unfoldings through (0, l)")
    pair_opts(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--forbid-t", type=int)
    p.add_argument("--forbid-g", type=int, help="experimental: keep this vertex out of ran(g)")
    p.add_argument("--oracle", action="store_true", help="cross-check against enumeration")
    p.add_argument("--max-domain", type=int, default=20, help="domain bound for --oracle")
    p.set_defaults(func=cmd_coverage)

    p = sub.add_parser("extend", help="apply the extension step to an unfolding")
    pair_opts(p)
    p.add_argument("--unfolding", help="unfolding file (default: base unfolding from --m --n --seed-l)")
    p.add_argument("--seed-l", type=int, default=0)
    p.add_argument("--case", type=int, choices=[1, 2, 3, 4], required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_extend)

    p = sub.add_parser("classify", help="D/E block of radii")
    _ladder_options(p)
    _seq_option(p, "seq", "index sequence")
    p.add_argument("--r", nargs="+", required=True, help="radii as p/q")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("profile", help="extract the unfolding traced by a profile")
    p.add_argument("file")
    pair_opts(p)
    _ladder_options(p)
    p.add_argument("--beta-ladder", help="ladder on the image side (default: same)")
    p.add_argument("--dump", help="write the extracted unfolding here")
    p.set_defaults(func=cmd_profile)

    p = sub.add_parser("render", help="concentric-circle diagram")
    _ladder_options(p)
    _seq_option(p, "seq", "index sequence")
    p.add_argument("--hi-block", type=int, required=True, help="outermost rung drawn")
    p.add_argument("--format", choices=["ascii", "svg"], default="ascii")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("etail", help="window tail equivalence of difference sequences")
    p.add_argument("--a", required=True)
    p.add_argument("--b", required=True)
    p.add_argument("--max-shift", type=int, required=True)
    p.add_argument("--min-overlap", type=int, required=True)
    p.add_argument("--index-sequences", action="store_true", help="inputs are index sequences; compare their differences")
    p.set_defaults(func=cmd_etail)

    p = sub.add_parser("family", help="pairwise tail-inequivalent sequences")
    p.add_argument("--count", type=int, required=True)
    p.add_argument("--length", type=int, required=True)
    p.set_defaults(func=cmd_family)

    p = sub.add_parser("campaign", help="run a lemma campaign over a corpus")
    p.add_argument("--lemma", choices=LEMMAS, required=True)
    p.add_argument("--corpus", help="corpus file")
    p.add_argument("--pair", action="append", help="extra pair \"m | n\" (repeatable)")
    p.add_argument("--only", help="run a single instance id")
    p.add_argument("--max-domain", type=int, default=10)
    p.add_argument("--hi", type=int)
    p.add_argument("--max-shift", type=int)
    p.add_argument("--min-overlap", type=int, default=2)
    p.add_argument("--seed-arrows", type=int, default=2)
    p.add_argument("--workers", type=int, help="parallel workers (default WADGELAB_WORKERS or 1)")
    p.set_defaults(func=cmd_campaign)
    return ap


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"wadgelab {args.command}: error: {exc}", file=sys.stderr)
        return 2
    except WadgeLabError as exc:
        # malformed or out-of-range inputs are usage errors; failed checks are not
        code = 2 if isinstance(exc, ValueError) else 1
        print(f"wadgelab {args.command}: {type(exc).__name__}: {exc}", file=sys.stderr)
        return code
    except ValueError as exc:
        print(f"wadgelab {args.command}: error: {exc}", file=sys.stderr)
        return 2

if __name__ == "__main__":
    sys.exit(main())
