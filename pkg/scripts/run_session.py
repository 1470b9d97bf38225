"""Run session files (or a single command given as flags) and print canonical reports.

Usage:
    python scripts/run_session.py inputs/torsion_strata.session
    python scripts/run_session.py --ring t1,t2 --dim "ideal(t1)"
    python scripts/run_session.py --weyl 2 --hc-equiv "t1-2" "t1-1" --via Y1

Exit codes: 0 success, 1 a command failed, 2 a parse error occurred.
"""
import argparse
import logging
import os
import sys

from errors import AlgebraError, PolynomialSyntaxError, SessionError, SessionSyntaxError
from harish_chandra import (DEFAULT_DEPTH, assassin_bound_witnesses, equiv_reachable, equiv_u,
                            identity_generator, is_principal, is_split_certified, weyl_datum)
from ideal_engine import (Ideal, contains, dimension, groebner_basis, ideal_intersection,
                          ideal_quotient, is_comaximal, radical_membership, saturation)
from poly_core import DEFAULT_ORDER, format_poly, monomial_order, poly_ring
from session_parser import parse_session, read_session
from spectrum import (CoheightAtMost, PrimeIdeal, UpClosureOf, canonical_generators, coheight,
                      height, make_prime)
from torsion import (CyclicModule, ass_module, crt_decompose, hom_cyclic_is_zero,
                     is_regular_sequence, make_module, min_supp, p_component, strata_profile,
                     torsion_radical)

logger = logging.getLogger(__name__)

EXIT_OK, EXIT_SEMANTIC, EXIT_PARSE = 0, 1, 2
DECLARED_PRIMALITY_NOTE = "note: conditional on declared primality"
DECLARED_COMPONENTS_NOTE = "note: declared primary components, primary-ness not verified"
NON_PRINCIPAL_NOTE = "note: non-principal prime, shifted generator by generator"


def format_basis(polys):
    return "{" + ", ".join(format_poly(g) for g in polys) + "}"


def format_ideal(ideal):
    """Reduced grevlex basis in parentheses, "(0)" for the zero ideal."""
    basis = groebner_basis(ideal)
    return "(" + ", ".join(format_poly(g) for g in basis) + ")" if basis else "(0)"


def format_prime(p):
    """A prime by its canonical generators."""
    basis = canonical_generators(p)
    return "(" + ", ".join(format_poly(g) for g in basis) + ")" if basis else "(0)"


def format_handle(handle):
    """A submodule as numerator / denominator, or "whole module" / "0"."""
    if handle.is_whole:
        return "whole module"
    if handle.is_zero:
        return "0"
    return f"{format_ideal(handle.numerator)} / {format_ideal(handle.denominator)}"


def format_bool(value):
    return "true" if value else "false"


def format_chain(witness, datum):
    """q_0 -u-> q_1 -v-> ... with generator names on the arrows."""
    text = format_prime(witness.primes[0])
    for k, prime in zip(witness.generator_indices, witness.primes[1:]):
        text += f" -{datum.generators[k].name}-> {format_prime(prime)}"
    return text


class SessionRunner:
    """Executes parsed statements in order, keeping the declared names."""

    def __init__(self, order=DEFAULT_ORDER):
        self.order = monomial_order(order)
        self.ring = None
        self.datum = None
        self.names = {}

    # lookups

    def _require_ring(self):
        if self.ring is None:
            raise SessionError("no ring declared")
        return self.ring

    def _lookup(self, name):
        if name not in self.names:
            raise SessionError(f"'{name}' is not declared")
        return self.names[name]

    def _ideal(self, name):
        value = self._lookup(name)
        if isinstance(value, PrimeIdeal):
            return value.ideal
        if isinstance(value, Ideal):
            return value
        raise SessionError(f"'{name}' is not an ideal")

    def _prime(self, name):
        value = self._lookup(name)
        if not isinstance(value, PrimeIdeal):
            raise SessionError(f"'{name}' is not a prime")
        return value

    def _module(self, name):
        value = self._lookup(name)
        if not isinstance(value, CyclicModule):
            raise SessionError(f"'{name}' is not a module")
        return value

    def _poly(self, text):
        return self._require_ring().parse(text)

    def _datum(self):
        if self.datum is None:
            raise SessionError("no Harish-Chandra datum declared (use 'weyl n=<k>')")
        return self.datum

    def _declare(self, name, value):
        if name in self.names:
            raise SessionError(f"'{name}' is already declared")
        self.names[name] = value

    @staticmethod
    def _prime_notes(*primes):
        """Trust flag for results resting on primes that were not verified."""
        return [DECLARED_PRIMALITY_NOTE] if any(not p.trusted for p in primes) else []

    @classmethod
    def _module_notes(cls, M, *primes):
        """Notes for a module result: its declared component primes, extra primes, declared components."""
        declared = [c.prime for c in M.decomposition] if M.declared else []
        notes = cls._prime_notes(*declared, *primes)
        return notes + ([DECLARED_COMPONENTS_NOTE] if M.declared else [])

    @classmethod
    def _shift_notes(cls, *primes):
        """Notes for shift relations: trust flag, then the non-principal flag."""
        notes = cls._prime_notes(*primes)
        return notes + ([NON_PRINCIPAL_NOTE] if any(not is_principal(p) for p in primes) else [])

    # declarations

    def do_ring(self, args):
        if self.ring is not None:
            raise SessionError("the ring is already declared")
        self.ring = poly_ring(tuple(args["variables"]))
        return []

    def do_weyl(self, args):
        if self.datum is not None:
            raise SessionError("a Harish-Chandra datum is already declared")
        datum = weyl_datum(args["n"])
        if self.ring is not None and self.ring != datum.ring:
            raise SessionError(f"weyl n={args['n']} needs the ring {datum.ring}, not {self.ring}")
        self.ring, self.datum = datum.ring, datum
        return []

    def do_ideal(self, args):
        ring = self._require_ring()
        self._declare(args["name"], Ideal(ring, [ring.parse(text) for text in args["polys"]]))
        return []

    def do_prime(self, args):
        ring = self._require_ring()
        ideal = Ideal(ring, [ring.parse(text) for text in args["polys"]])
        self._declare(args["name"], make_prime(ideal, args["cert"], args["name"]))
        return []

    def do_module(self, args):
        decomposition = None
        if "decomp" in args:
            decomposition = [(self._ideal(q), self._prime(p)) for q, p in args["decomp"]]
        module = make_module(self._ideal(args["ideal"]), decomposition, args["name"])
        self._declare(args["name"], module)
        return []

    # ideal commands

    def do_gb(self, args):
        order = monomial_order(args.get("order", self.order))
        return [format_basis(groebner_basis(self._ideal(args["name"]), order))]

    def do_member(self, args):
        return [f"member = {format_bool(contains(self._ideal(args['name']), self._poly(args['poly'])))}"]

    def do_dim(self, args):
        return [f"dim = {dimension(self._ideal(args['name']))}"]

    def do_intersect(self, args):
        return [format_basis(groebner_basis(ideal_intersection(self._ideal(args["left"]),
                                                               self._ideal(args["right"]))))]

    def do_quotient(self, args):
        result = ideal_quotient(self._ideal(args["name"]), self._poly(args["poly"]))
        return [format_basis(groebner_basis(result))]

    def do_saturate(self, args):
        return [format_basis(groebner_basis(saturation(self._ideal(args["left"]),
                                                       self._ideal(args["right"]))))]

    def do_comaximal(self, args):
        value = is_comaximal(self._ideal(args["left"]), self._ideal(args["right"]))
        return [f"comaximal = {format_bool(value)}"]

    def do_radmember(self, args):
        value = radical_membership(self._poly(args["poly"]), self._ideal(args["name"]))
        return [f"radmember = {format_bool(value)}"]

    def do_homzero(self, args):
        value = hom_cyclic_is_zero(self._ideal(args["left"]), self._ideal(args["right"]))
        return [f"homzero = {format_bool(value)}"]

    def do_regseq(self, args):
        polys = [self._poly(text) for text in args["polys"]]
        return [f"regular = {format_bool(is_regular_sequence(polys))}"]

    # spectrum and module commands

    def do_coheight(self, args):
        p = self._prime(args["name"])
        return [f"coheight = {coheight(p)}"] + self._prime_notes(p)

    def do_height(self, args):
        p = self._prime(args["name"])
        return [f"height = {height(p)}"] + self._prime_notes(p)

    def do_ass(self, args):
        M = self._module(args["name"])
        primes = ass_module(M)
        return (["ass = [" + ", ".join(format_prime(p) for p in primes) + "]"]
                + self._module_notes(M, *primes))

    def do_minsupp(self, args):
        M = self._module(args["name"])
        primes = min_supp(M)
        return (["minsupp = [" + ", ".join(format_prime(p) for p in primes) + "]"]
                + self._module_notes(M, *primes))

    def do_torsion(self, args):
        M = self._module(args["name"])
        antichain = ()
        if "bound" in args:
            Z = CoheightAtMost(args["bound"])
        else:
            antichain = tuple(self._prime(name) for name in args["primes"])
            Z = UpClosureOf(antichain)
        return [f"torsion = {format_handle(torsion_radical(M, Z))}"] + self._module_notes(M, *antichain)

    def do_strata(self, args):
        M = self._module(args["name"])
        profile = strata_profile(M)
        lines = [f"t_{row.index}: nonzero = {format_bool(row.nonzero)}, whole = {format_bool(row.whole)}"
                 for row in profile.rows]
        lines.append("stratum = mixed" if profile.is_mixed else f"stratum = {profile.pure_stratum}")
        return lines + self._module_notes(M)

    def do_pcomp(self, args):
        M, p = self._module(args["left"]), self._prime(args["right"])
        return [f"pcomp = {format_handle(p_component(M, p))}"] + self._module_notes(M, p)

    def do_decompose(self, args):
        M = self._module(args["name"])
        result = crt_decompose(M)
        lines = []
        for k, (p, handle) in enumerate(result.parts):
            line = f"component {format_prime(p)}: {format_handle(handle)}"
            if result.dimensions is not None:
                line += f", dim = {result.dimensions[k]}"
            lines.append(line)
        if result.total is not None:
            lines.append(f"total dim = {result.total}")
        return lines + self._module_notes(M)

    # Harish-Chandra commands

    def do_hc_equiv(self, args):
        datum = self._datum()
        q, p = self._prime(args["q"]), self._prime(args["p"])
        u = identity_generator(datum.ring) if args["gen"] == "1" else datum.generator(args["gen"])
        return [f"related = {format_bool(equiv_u(q, p, u))}"] + self._shift_notes(q, p)

    def _search_args(self, args):
        start = self._prime(args["start"])
        candidates = [self._prime(name) for name in args["primes"]]
        return start, candidates, args.get("depth", DEFAULT_DEPTH)

    def do_hc_reach(self, args):
        datum = self._datum()
        start, candidates, depth = self._search_args(args)
        reached = equiv_reachable(start, candidates, datum, depth)
        lines = ["reachable = [" + ", ".join(format_prime(q) for q, _ in reached) + "]"]
        lines += [f"chain: {format_chain(w, datum)}" for _, w in reached]
        return lines + self._shift_notes(start, *candidates)

    def do_ass_bound(self, args):
        datum = self._datum()
        p, candidates, depth = self._search_args(args)
        admitted = assassin_bound_witnesses(p, candidates, datum, depth)
        lines = ["admitted = [" + ", ".join(format_prime(q) for q, _ in admitted) + "]"]
        lines += [f"chain: {format_chain(w, datum)}" for _, w in admitted[1:]]
        return lines + self._shift_notes(p, *candidates)

    def do_ass_split(self, args):
        datum = self._datum()
        p, candidates, depth = self._search_args(args)
        lines = [f"split = {format_bool(is_split_certified(p, candidates, datum, depth))}"]
        return lines + self._shift_notes(p, *candidates)

    def execute(self, statement):
        """Dispatch to the do_<command> handler; returns report lines."""
        handler = getattr(self, "do_" + statement.kind.replace("-", "_"))
        return handler(statement.args)


def run_statements(statements, syntax_errors=(), order=DEFAULT_ORDER, headers=True):
    """Execute statements; returns (exit code, report text)."""
    blocks = []
    if syntax_errors:
        for error in syntax_errors:
            blocks.append(f"error: {error}")
        return EXIT_PARSE, "\n".join(blocks) + "\n"

    runner = SessionRunner(order)
    code = EXIT_OK
    for statement in statements:
        logger.debug("line %d: %s", statement.lineno, statement.text)
        try:
            body = runner.execute(statement)
        except PolynomialSyntaxError as e:
            body = [f"error: line {statement.lineno}: parse error: {e}"]
            code = EXIT_PARSE
        except AlgebraError as e:
            body = [f"error: line {statement.lineno}: {e}"]
            code = max(code, EXIT_SEMANTIC)
        if statement.is_declaration and not body:
            continue
        if headers:
            blocks.append(f"-- line {statement.lineno}: {statement.text}")
        blocks.extend(body)
    return code, "".join(line + "\n" for line in blocks)


def run_session(path, order=DEFAULT_ORDER):
    """Read, parse and run a session file; returns (exit code, report text)."""
    try:
        statements, errors = read_session(path)
    except OSError as e:
        return EXIT_PARSE, f"error: cannot read session file {path}: {e}\n"
    return run_statements(statements, errors, order)


SINGLE_COMMANDS = {
    "gb": 1, "member": 2, "dim": 1, "coheight": 1, "height": 1, "intersect": 2,
    "quotient": 2, "saturate": 2, "comaximal": 2, "radmember": 2, "homzero": 2,
    "regseq": "+", "hc_equiv": 2,
}


def build_parser():
    """Command-line flags for session files and single commands."""
    parser = argparse.ArgumentParser(description="Coheight strata and shift relations over polynomial rings.")
    parser.add_argument("session", nargs="?", help="session file to run")
    parser.add_argument("--order", default=DEFAULT_ORDER, help="monomial order for gb (lex, grevlex, elim:k)")
    parser.add_argument("--output", help="write the report to this file instead of stdout")
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    parser.add_argument("--ring", help="comma-separated variables, e.g. t1,t2")
    parser.add_argument("--weyl", type=int, help="use the Weyl datum with n variables")
    parser.add_argument("--cert", help="certificate for prime operands")
    parser.add_argument("--via", default=None, help="generator name for --hc-equiv")
    for command, nargs in SINGLE_COMMANDS.items():
        parser.add_argument("--" + command.replace("_", "-"), dest=command, nargs=nargs, metavar="ARG")
    return parser


def _operand(text):
    """Polynomial list of an operand written as ideal(f, g) or as a single polynomial."""
    text = text.strip()
    if text.startswith("ideal(") and text.endswith(")"):
        return text[len("ideal("):-1]
    return text


def single_session_lines(args):
    """Translate one-shot flags into session lines; the last line is the command."""
    if args.weyl is not None:
        lines = [f"weyl n={args.weyl}"]
    elif args.ring:
        lines = [f"ring {args.ring}"]
    else:
        raise SessionSyntaxError(0, "one of --ring or --weyl is required")

    chosen = [command for command in SINGLE_COMMANDS if getattr(args, command, None) is not None]
    if len(chosen) != 1:
        raise SessionSyntaxError(0, "exactly one command flag is required")
    command = chosen[0]
    values = getattr(args, command)
    if isinstance(values, str):
        values = [values]

    def declare(kind, index, text):
        name = f"A{index}"
        polys = _operand(text)
        if kind == "prime":
            cert = args.cert or ("principal-irreducible" if "," not in polys else "declared")
            lines.append(f"prime {name} = ({polys}) cert={cert}")
        else:
            lines.append(f"ideal {name} = ({polys})")
        return name

    if command in ("gb", "dim"):
        lines.append(f"{command} {declare('ideal', 1, values[0])}")
    elif command in ("coheight", "height"):
        lines.append(f"{command} {declare('prime', 1, values[0])}")
    elif command in ("member", "quotient", "radmember"):
        lines.append(f"{command} {declare('ideal', 1, values[0])} {values[1]}")
    elif command in ("intersect", "saturate", "comaximal", "homzero"):
        lines.append(f"{command} {declare('ideal', 1, values[0])} {declare('ideal', 2, values[1])}")
    elif command == "regseq":
        lines.append("regseq " + ", ".join(values))
    else:
        if not args.via:
            raise SessionSyntaxError(0, "--hc-equiv needs --via")
        q, p = declare("prime", 1, values[0]), declare("prime", 2, values[1])
        lines.append(f"hc-equiv {q} {p} via {args.via}")
    if command == "gb" and args.order:
        lines[-1] += f" order={args.order}"
    return lines


def run_single(flags):
    """One command given as flags; prints only the result body."""
    args = build_parser().parse_args(flags) if isinstance(flags, (list, tuple)) else flags
    try:
        lines = single_session_lines(args)
    except SessionSyntaxError as e:
        return EXIT_PARSE, f"error: {e}\n"
    statements, errors = parse_session(lines)
    return run_statements(statements, errors, args.order, headers=False)


def main(argv=None):
    """Entry point: run, write the report and return the exit code."""
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s", stream=sys.stderr)
    if args.session:
        code, report = run_session(args.session, args.order)
    else:
        code, report = run_single(args)

    if args.output:
        directory = os.path.dirname(args.output)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(args.output, "w") as f:
            f.write(report)
        print(f"Report written to {args.output}")
    else:
        sys.stdout.write(report)
    return code


if __name__ == "__main__":
    sys.exit(main())
