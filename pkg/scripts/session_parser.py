"""Reader for session files: one declaration or command per line, '#' starts a comment."""
import re
from dataclasses import dataclass, field

from errors import SessionSyntaxError

NAME = r"[A-Za-z][A-Za-z0-9_]*"
_NAME_RE = re.compile(rf"^{NAME}$")

_UNARY = ("dim", "coheight", "height", "ass", "minsupp", "strata", "decompose")
_BINARY = ("intersect", "saturate", "comaximal", "homzero", "pcomp")
_WITH_POLY = ("member", "quotient", "radmember")
_SEARCHES = ("hc-reach", "ass-bound", "ass-split")

PATTERNS = {
    "ring": re.compile(r"ring\s+(?P<variables>\S.*)"),
    "weyl": re.compile(r"weyl\s+n\s*=\s*(?P<n>\d+)"),
    "ideal": re.compile(rf"ideal\s+(?P<name>{NAME})\s*=\s*(?:ideal\s*)?\((?P<polys>.*)\)"),
    "prime": re.compile(rf"prime\s+(?P<name>{NAME})\s*=\s*(?:ideal\s*)?\((?P<polys>.*)\)"
                        rf"\s+cert\s*=\s*(?P<cert>[A-Za-z-]+)"),
    "module": re.compile(rf"module\s+(?P<name>{NAME})\s*=\s*quotient\(\s*(?P<ideal>{NAME})\s*\)"
                         rf"(?:\s*\[\s*decomp(?:osition)?\s*:\s*(?P<decomp>[^\]]*)\])?"),
    "gb": re.compile(rf"gb\s+(?P<name>{NAME})(?:\s+order\s*=\s*(?P<order>\S+))?"),
    "torsion": re.compile(rf"torsion\s+(?P<name>{NAME})\s+"
                          rf"(?:Z\s*<=\s*(?P<bound>-?\d+)|up\s*\((?P<primes>[^)]*)\))"),
    "regseq": re.compile(r"regseq\s+(?P<polys>.+)"),
    "hc-equiv": re.compile(rf"hc-equiv\s+(?P<q>{NAME})\s+(?P<p>{NAME})\s+via\s+(?P<gen>[A-Za-z0-9_]+)"),
}
for _verb in _UNARY:
    PATTERNS[_verb] = re.compile(rf"{_verb}\s+(?P<name>{NAME})")
for _verb in _BINARY:
    PATTERNS[_verb] = re.compile(rf"{_verb}\s+(?P<left>{NAME})\s+(?P<right>{NAME})")
for _verb in _WITH_POLY:
    PATTERNS[_verb] = re.compile(rf"{_verb}\s+(?P<name>{NAME})\s+(?P<poly>.+)")
for _verb in _SEARCHES:
    PATTERNS[_verb] = re.compile(rf"{_verb}\s+(?P<start>{NAME})\s+in\s+\{{(?P<primes>[^}}]*)\}}"
                                 rf"(?:\s+depth\s+(?P<depth>\d+))?")

DECLARATIONS = ("ring", "weyl", "ideal", "prime", "module")
_DECOMP_ENTRY = re.compile(rf"\(\s*({NAME})\s*,\s*({NAME})\s*\)")


@dataclass(frozen=True)
class Statement:
    """One parsed line: its number, text, command kind and arguments."""
    lineno: int
    kind: str
    text: str
    args: dict = field(default_factory=dict)

    @property
    def is_declaration(self):
        return self.kind in DECLARATIONS


def split_list(text, lineno, what="polynomial"):
    """Comma-separated items; an empty text is the empty list."""
    if not text.strip():
        return []
    items = [item.strip() for item in text.split(",")]
    if any(not item for item in items):
        raise SessionSyntaxError(lineno, f"empty {what} in '{text}'")
    return items


def _names(text, lineno):
    names = split_list(text, lineno, "name")
    for name in names:
        if not _NAME_RE.match(name):
            raise SessionSyntaxError(lineno, f"'{name}' is not a valid name")
    return names


def _decomposition(text, lineno):
    pairs = _DECOMP_ENTRY.findall(text)
    leftover = _DECOMP_ENTRY.sub("", text)
    if not pairs or leftover.strip(" \t;,"):
        raise SessionSyntaxError(lineno, f"malformed decomposition '{text}'")
    return pairs


def parse_line(lineno, line):
    """Statement for one non-blank line, or None for comments."""
    text = line.split("#", 1)[0].strip()
    if not text:
        return None
    verb = text.split()[0]
    pattern = PATTERNS.get(verb)
    if pattern is None:
        raise SessionSyntaxError(lineno, f"unknown statement '{verb}'")
    match = pattern.fullmatch(text)
    if match is None:
        raise SessionSyntaxError(lineno, f"malformed '{verb}' statement: {text}")

    args = {key: value for key, value in match.groupdict().items() if value is not None}
    if verb == "ring":
        args["variables"] = split_list(args["variables"], lineno, "variable")
    elif verb == "weyl":
        args["n"] = int(args["n"])
    elif verb in ("ideal", "prime"):
        args["polys"] = split_list(args["polys"], lineno)
    elif verb == "module" and "decomp" in args:
        args["decomp"] = _decomposition(args["decomp"], lineno)
    elif verb == "torsion":
        if "bound" in args:
            args["bound"] = int(args["bound"])
        else:
            args["primes"] = _names(args.get("primes", ""), lineno)
    elif verb == "regseq":
        args["polys"] = split_list(args["polys"], lineno)
    elif verb in _SEARCHES:
        args["primes"] = _names(args["primes"], lineno)
        if "depth" in args:
            args["depth"] = int(args["depth"])
    return Statement(lineno, verb, text, args)


def parse_session(lines):
    """Parse every line; returns the statements and the syntax errors found."""
    statements, errors = [], []
    for lineno, line in enumerate(lines, start=1):
        try:
            statement = parse_line(lineno, line)
        except SessionSyntaxError as e:
            errors.append(e)
            continue
        if statement is not None:
            statements.append(statement)
    return statements, errors


def read_session(path):
    """Parse a session file from disk."""
    with open(path, "r") as f:
        return parse_session(f.read().splitlines())
