"""``kdecomp`` command-line entry point.

Exit status: 0 when every check passes, 1 when a mathematical claim fails
on some instance, 2 for input or usage errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
import time
from pathlib import Path

from . import enumeration, natpoly
from .classify import classify
from .decomposition import associated_primes, primary_decomposition
from .errors import Finding, InputError
from .ideals import all_ideals, all_k_ideals, generated_ideal, is_k_ideal, k_closure, parse_set
from .semiring import flags, format_srs, parse_srs
from .sweep import verify_semiring


class Output:
    """Collects report lines (streamed) and a JSON document (emitted at the end)."""

    def __init__(self, argv, json_mode=False, out_path=None):
        self.json_mode = json_mode
        self.data = {"command": " ".join(["kdecomp", *argv])}
        self.findings = []
        self._fh = open(out_path, "w") if out_path else None

    def line(self, text=""):
        if self.json_mode:
            return
        print(text)
        if self._fh:
            self._fh.write(text + "\n")

    def finding(self, claim, message, semiring=None):
        rec = {"claim": claim, "message": message}
        if semiring is not None:
            rec["semiring"] = semiring
        self.findings.append(rec)

    def close(self):
        if self.json_mode:
            self.data["findings"] = self.findings
            text = json.dumps(self.data, indent=2, sort_keys=True)
            print(text)
            if self._fh:
                self._fh.write(text + "\n")
        if self._fh:
            self._fh.close()


def _load(path, out):
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    out.data.setdefault("inputs", {})[str(path)] = hashlib.sha256(raw).hexdigest()
    return parse_srs(raw.decode("utf-8", errors="replace"))


def _ideal_from(S, text):
    return generated_ideal(S, parse_set(S, text))


# -- subcommands ---------------------------------------------------------------

def cmd_check(args, out):
    S = _load(args.file, out)
    f = flags(S)
    out.data["result"] = {"name": S.name, "order": S.order, "flags": f.__dict__}
    out.line(f"ok {S.name} order={S.order}")
    out.line(f"additively_cancellative={str(f.additively_cancellative).lower()} yoked={str(f.yoked).lower()} "
             f"zerosumfree={str(f.zerosumfree).lower()} is_ring={str(f.is_ring).lower()}")


def cmd_ideals(args, out):
    S = _load(args.file, out)
    ideals = all_k_ideals(S) if args.k_only else all_ideals(S)
    out.data["result"] = [list(I.members) for I in ideals]
    for I in ideals:
        out.line(str(I))


def cmd_closure(args, out):
    S = _load(args.file, out)
    I = _ideal_from(S, args.set)
    C = k_closure(I)
    out.data["result"] = {"ideal": list(I.members), "k_closure": list(C.members)}
    out.line(str(C))


def cmd_classify(args, out):
    S = _load(args.file, out)
    I = _ideal_from(S, args.set)
    cls = classify(I)
    out.data["result"] = {
        "ideal": list(I.members),
        "proper": cls.is_proper,
        "prime": cls.is_prime,
        "primary": cls.is_primary,
        "radical": list(cls.radical.members),
        "k_irreducible": cls.is_k_irreducible,
    }
    out.line(cls.line())


def _proper_k(S, text):
    I = _ideal_from(S, text)
    if not I.is_proper:
        raise InputError(f"--set generates the whole semiring {I}")
    if not is_k_ideal(S, I):
        raise InputError(f"--set generates {I}, which is not a k-ideal (its k-closure is {k_closure(I)})")
    return I


def _primes_lines(I, out):
    ap = associated_primes(I)
    out.data.setdefault("result", {})["associated_primes"] = [
        {"prime": list(P.members), "witness": ap.witnesses[P]} for P in ap.primes
    ]
    for P in ap.primes:
        out.line(f"associated {P} witness {ap.witnesses[P]}")


def cmd_decompose(args, out):
    S = _load(args.file, out)
    I = _proper_k(S, args.set)
    out.line(f"ideal {I}")
    try:
        dec = primary_decomposition(I)
    except Finding as exc:
        out.line(f"finding [decomposition-exists] {exc}")
        out.finding("decomposition-exists", str(exc), S.name)
        out.data["result"] = {"ideal": list(I.members), "components": None}
    else:
        out.data["result"] = {
            "ideal": list(I.members),
            "components": [
                {"component": list(Q.members), "radical": list(P.members)}
                for Q, P in zip(dec.components, dec.radicals)
            ],
            "reduced": dec.reduced,
        }
        for Q, P in zip(dec.components, dec.radicals):
            out.line(f"component {Q} radical {P}")
        out.line(f"reduced {str(dec.reduced).lower()}")
    _primes_lines(I, out)


def cmd_primes(args, out):
    S = _load(args.file, out)
    I = _proper_k(S, args.set)
    out.line(f"ideal {I}")
    _primes_lines(I, out)


def _emit_report(rep, out, verbose):
    out.line(rep.summary_line())
    for f in rep.findings:
        out.line(f"  finding {f.line()}")
        out.finding(f.claim, f.message, rep.semiring.name)
    if verbose:
        for key in sorted(rep.notes):
            out.line(f"  note {key} count={rep.notes[key]} e.g. {rep.note_examples[key]}")


def cmd_verify(args, out):
    S = _load(args.file, out)
    rep = verify_semiring(S, keep_decompositions=True)
    _emit_report(rep, out, verbose=True)
    for dec in rep.decompositions:
        comps = " ".join(f"{Q}:{P}" for Q, P in zip(dec.components, dec.radicals))
        out.line(f"  decomposition {dec.input} = {comps}")
    out.data["result"] = rep.as_dict()


def _verify_one(S):
    return verify_semiring(S)


def _jobs(args):
    if args.jobs is not None:
        return max(1, args.jobs)
    env = os.environ.get("KDECOMP_JOBS")
    if env:
        try:
            return max(1, int(env))
        except ValueError:
            raise InputError(f"KDECOMP_JOBS={env!r} is not an integer") from None
    return 1


def cmd_verify_all(args, out):
    stream = enumeration.enumerate_semirings(args.order, args.iso, override=args.force)
    jobs = _jobs(args)
    totals = {"semirings": 0, "k_ideals": 0, "k_irreducible": 0, "decomposed": 0, "findings": 0}
    notes = {}
    per = []

    def consume(reports):
        for rep in reports:
            totals["semirings"] += 1
            totals["k_ideals"] += rep.counters["k_ideals"]
            totals["k_irreducible"] += rep.counters["k_irreducible"]
            totals["decomposed"] += rep.counters["decomposed"]
            totals["findings"] += len(rep.findings)
            for k, v in rep.notes.items():
                notes[k] = notes.get(k, 0) + v
            _emit_report(rep, out, verbose=False)
            if out.json_mode:
                per.append(rep.as_dict())

    if jobs == 1:
        consume(map(_verify_one, stream))
    else:
        from multiprocessing import Pool

        with Pool(jobs) as pool:
            consume(pool.imap(_verify_one, stream, chunksize=4))
    out.line(" ".join(f"{k}={v}" for k, v in totals.items()))
    for k in sorted(notes):
        out.line(f"note {k} count={notes[k]}")
    out.data["result"] = {"totals": totals, "notes": dict(sorted(notes.items())), "semirings": per}


def cmd_enumerate(args, out):
    from .ideals import _k_ideal_masks

    target = Path(args.out_dir) if args.out_dir else None
    if target:
        target.mkdir(parents=True, exist_ok=True)
    rows = ["name\tflags\tk_ideals"]
    names = []
    for S in enumeration.enumerate_semirings(args.order, args.iso, override=args.force):
        row = f"{S.name}\t{flags(S).bits()}\t{len(_k_ideal_masks(S))}"
        rows.append(row)
        names.append(S.name)
        out.line(row.replace("\t", " "))
        if target:
            (target / f"{S.name}.srs").write_text(format_srs(S))
    if target:
        (target / "census.tsv").write_text("\n".join(rows) + "\n")
    out.line(f"total {len(names)}")
    out.data["result"] = {"count": len(names), "census": [r.split("\t") for r in rows[1:]]}


def cmd_natpoly(args, out):
    if args.check_lemma210:
        a, bound = args.check_lemma210
        rep = natpoly.nat_principal_k_check(a, bound)
        out.data["result"] = rep
        ce = rep["counterexample"]
        out.line(f"a={a} bound={bound} pairs={rep['pairs']} counterexample={'none' if ce is None else ce}")
        out.line("pass" if rep["ok"] else "FAIL")
        if not rep["ok"]:
            out.finding("principal-k-ideal", f"counterexample {rep['counterexample']} for a={a}")
        return
    if args.demo is None:
        raise InputError("natpoly needs --demo or --check-lemma210")
    if args.demo == "golan":
        cert = natpoly.golan_witness()
    elif args.demo == "yoked":
        f = natpoly.NatPoly((2, 9, 5))
        g = natpoly.NatPoly((5, 3, 11))
        h = natpoly.yoked_pair_check(f, g)
        lines = [f"f = {f}", f"g = {g}", f"f + h = g solvable: {str(g.dominates(f)).lower()}",
                 f"g + h = f solvable: {str(f.dominates(g)).lower()}",
                 f"h = {h}" if h is not None else "h: none", "N[x] is not yoked" if h is None else "pair is yoked"]
        for ln in lines:
            out.line(ln)
        out.data["result"] = {"f": list(f.coeffs), "g": list(g.coeffs), "h": None if h is None else list(h.coeffs)}
        return
    else:
        cert = natpoly.nat_sum_not_k_witness(args.a, args.b)
    lines = list(cert.lines())
    for ln in lines:
        out.line(ln)
    out.data["result"] = {"lines": lines, "valid": cert.validate()}
    if not cert.validate():
        out.finding(f"demo-{args.demo}", "certificate failed validation")


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    report = argparse.ArgumentParser(add_help=False)
    report.add_argument("--json", action="store_true", help="emit one JSON document instead of text")
    report.add_argument("--timing", action="store_true", help="print wall time to stderr")
    to_file = argparse.ArgumentParser(add_help=False)
    to_file.add_argument("--out", metavar="FILE", help="also write the report to FILE")

    p = argparse.ArgumentParser(prog="kdecomp", description="k-ideals and primary decomposition in finite semirings")
    sub = p.add_subparsers(dest="command", required=True)

    def command(name, func, help_=None, file=True, parents=(report, to_file)):
        sp = sub.add_parser(name, help=help_, parents=list(parents))
        if file:
            sp.add_argument("file")
        sp.set_defaults(func=func)
        return sp

    command("check", cmd_check, "validate a .srs file")
    command("ideals", cmd_ideals, "list ideals").add_argument("--k-only", action="store_true")
    for name, fn, h in (
        ("closure", cmd_closure, "k-closure of the ideal generated by --set"),
        ("classify", cmd_classify, "classify the ideal generated by --set"),
        ("decompose", cmd_decompose, "primary decomposition of a k-ideal"),
        ("primes", cmd_primes, "associated primes of a k-ideal"),
    ):
        command(name, fn, h).add_argument("--set", required=True, help="comma-separated generators, e.g. 0,2")
    command("verify", cmd_verify, "run every theorem check on one semiring")

    va = command("verify-all", cmd_verify_all, "run the checks over the whole census", file=False)
    va.add_argument("--jobs", type=int, default=None, help="worker processes (default $KDECOMP_JOBS or 1)")
    en = command("enumerate", cmd_enumerate, "write the census as .srs files", file=False, parents=(report,))
    en.add_argument("--out", dest="out_dir", metavar="DIR")
    for sp in (va, en):
        sp.add_argument("--order", type=int, required=True)
        sp.add_argument("--iso", action="store_true", help="one representative per isomorphism class")
        sp.add_argument("--force", action="store_true", help=f"allow orders above {enumeration.SOFT_MAX_ORDER}")

    sp = command("natpoly", cmd_natpoly, "certificates in N and N[x]", file=False)
    sp.add_argument("--demo", choices=("golan", "yoked", "sums"))
    sp.add_argument("--check-lemma210", nargs=2, type=int, metavar=("A", "BOUND"))
    sp.add_argument("--a", type=int, default=2, help="first generator for --demo sums")
    sp.add_argument("--b", type=int, default=3, help="second generator for --demo sums")
    return p


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    start = time.perf_counter()
    try:
        out = Output(argv, args.json, getattr(args, "out", None))
    except OSError as exc:
        print(f"error: --out: {exc.strerror}", file=sys.stderr)
        return 2
    try:
        args.func(args, out)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        out.close()
        return 2
    out.close()
    if args.timing:
        print(f"wall time {time.perf_counter() - start:.3f}s", file=sys.stderr)
    return 1 if out.findings else 0


if __name__ == "__main__":
    sys.exit(main())
