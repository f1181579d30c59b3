"""Text format for algebras, dual structures, and catalog pair entries.

An algebra block declares generators, parameters, and a bracket table:

    algebra C1_p {
      bosons: X1 X2;
      fermions: X3;
      param p in R - {0};
      [X1, X2] = X2;
      [X1, X3] = p*X3;
    }

Curly brackets are notation for a bracket of two odd generators; the
stored structure is the same. Coefficients are products of scalar atoms
(rationals, i-multiples) and parameter names; a parenthesized factor is a
single complex scalar such as (1+2i). Statements end with ';' and '#'
starts a comment.

A pair block records one catalog entry: the primal algebra by name, the
dual components as a bracket table on mirror generators Xt1..XtN, entry
parameters with ranges, sample values, and free-form notes:

    pair "(B,(A11+A))" {
      table: 4;
      primal: B;
      dual: { {Xt2, Xt2} = i*Xt1; };
    }
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import LieSuperAlgebra, ParamSpec
from .bialgebra import DualStructure
from .errors import ParseError, ScalarParseError, ValidationError
from .poly import MultiPoly, as_poly
from .scalars import GScalar, GradedDims, parse_scalar

__all__ = [
    "Token",
    "tokenize",
    "AlgebraDef",
    "PairDef",
    "ParsedFile",
    "parse_text",
    "parse_file",
    "parse_dual_statements",
    "format_algebra",
    "format_dual",
]


# -- tokenizer ----------------------------------------------------------------------

_PUNCT = set("{}[](),;:=+-*/")


class Token:
    __slots__ = ("kind", "text", "line", "column")

    def __init__(self, kind, text, line, column):
        self.kind = kind
        self.text = text
        self.line = line
        self.column = column

    def __repr__(self):
        return f"Token({self.kind}, {self.text!r}, {self.line}:{self.column})"


def tokenize(text: str, filename="<input>") -> list:
    tokens = []
    line = 1
    col = 1
    pos = 0
    n = len(text)
    while pos < n:
        ch = text[pos]
        if ch == "\n":
            line += 1
            col = 1
            pos += 1
            continue
        if ch in " \t\r":
            pos += 1
            col += 1
            continue
        if ch == "#":
            while pos < n and text[pos] != "\n":
                pos += 1
            continue
        if ch == '"':
            end = text.find('"', pos + 1)
            if end < 0:
                raise ParseError("unterminated string", line, col, filename)
            tokens.append(Token("STRING", text[pos + 1:end], line, col))
            col += end + 1 - pos
            pos = end + 1
            continue
        if ch.isdigit() or (
            ch == "i" and _is_scalar_i(text, pos)
        ):
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            if pos < n and text[pos] == "i":
                pos += 1
            if pos < n and text[pos] == "/" and pos + 1 < n and text[pos + 1].isdigit():
                pos += 1
                while pos < n and text[pos].isdigit():
                    pos += 1
            tokens.append(Token("NUMBER", text[start:pos], line, col))
            col += pos - start
            continue
        if ch.isalpha() or ch == "_":
            start = pos
            while pos < n and (text[pos].isalnum() or text[pos] == "_"):
                pos += 1
            tokens.append(Token("IDENT", text[start:pos], line, col))
            col += pos - start
            continue
        if ch in _PUNCT:
            tokens.append(Token(ch, ch, line, col))
            pos += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", line, col, filename)
    tokens.append(Token("EOF", "", line, col))
    return tokens


def _is_scalar_i(text, pos):
    """A bare 'i' (or 'i/3') is a scalar atom, not an identifier."""
    nxt = text[pos + 1] if pos + 1 < len(text) else ""
    if nxt.isalnum() or nxt == "_":
        return False
    return True


# -- parsed structures --------------------------------------------------------------


class AlgebraDef:
    """A parsed algebra block, buildable into a LieSuperAlgebra."""

    def __init__(self, name, bosons, fermions, params, flags, brackets):
        self.name = name
        self.bosons = tuple(bosons)
        self.fermions = tuple(fermions)
        self.params = dict(params)
        self.flags = frozenset(flags)
        self.brackets = list(brackets)  # (i, j, {k: poly}) with 1-based indices

    @property
    def gen_names(self):
        return self.bosons + self.fermions

    @property
    def dims(self):
        return GradedDims(len(self.bosons), len(self.fermions))

    def build(self) -> LieSuperAlgebra:
        entries = {}
        for i, j, rhs in self.brackets:
            for k, coeff in rhs.items():
                entries[(i, j, k)] = coeff
        return LieSuperAlgebra(
            self.name,
            self.dims,
            entries,
            params=self.params or None,
            check_reality="nonstandard_reality" not in self.flags,
        )


class PairDef:
    """A parsed catalog pair entry."""

    def __init__(self, entry_id, table, primal_name, params, samples,
                 dual_brackets, notes):
        self.entry_id = entry_id
        self.table = table
        self.primal_name = primal_name
        self.params = dict(params)
        self.samples = dict(samples)
        self.dual_brackets = list(dual_brackets)
        self.notes = tuple(notes)

    def build_dual(self, primal: LieSuperAlgebra) -> DualStructure:
        entries = {}
        for i, j, rhs in self.dual_brackets:
            for k, coeff in rhs.items():
                entries[(i, j, k)] = coeff
        params = dict(primal.params)
        params.update(self.params)
        return DualStructure(
            primal.dims,
            entries,
            name=self.entry_id,
            params=params or None,
        )


class ParsedFile:
    def __init__(self, algebras, pairs):
        self.algebras = algebras
        self.pairs = pairs


# -- recursive descent --------------------------------------------------------------


class _Parser:
    def __init__(self, tokens, filename):
        self.tokens = tokens
        self.pos = 0
        self.filename = filename

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        tok = self.tokens[self.pos]
        if tok.kind != "EOF":
            self.pos += 1
        return tok

    def fail(self, message, tok=None):
        tok = tok or self.peek()
        raise ParseError(message, tok.line, tok.column, self.filename)

    def expect(self, kind, what=None) -> Token:
        tok = self.peek()
        if tok.kind != kind:
            self.fail(f"expected {what or kind}, found {tok.text!r}", tok)
        return self.advance()

    def expect_ident(self, word=None) -> Token:
        tok = self.expect("IDENT", word or "a name")
        if word is not None and tok.text != word:
            self.fail(f"expected {word!r}, found {tok.text!r}", tok)
        return tok

    # ---- top level

    def parse_file(self, seed_algebras=None) -> ParsedFile:
        algebras = dict(seed_algebras) if seed_algebras else {}
        pairs = {}
        while self.peek().kind != "EOF":
            tok = self.expect("IDENT", "'algebra' or 'pair'")
            if tok.text == "algebra":
                block = self.parse_algebra_block()
                if block.name in algebras:
                    self.fail(f"duplicate algebra {block.name!r}", tok)
                algebras[block.name] = block
            elif tok.text == "pair":
                entry = self.parse_pair_block(algebras)
                if entry.entry_id in pairs:
                    self.fail(f"duplicate pair {entry.entry_id!r}", tok)
                pairs[entry.entry_id] = entry
            else:
                self.fail(f"expected 'algebra' or 'pair', found {tok.text!r}", tok)
        return ParsedFile(algebras, pairs)

    # ---- algebra blocks

    def parse_algebra_block(self) -> AlgebraDef:
        name = self.expect("IDENT", "algebra name").text
        self.expect("{")
        bosons = None
        fermions = None
        params = {}
        flags = set()
        raw_brackets = []
        while self.peek().kind != "}":
            tok = self.peek()
            if tok.kind == "IDENT" and tok.text == "bosons":
                if bosons is not None:
                    self.fail("duplicate bosons statement", tok)
                self.advance()
                bosons = self.parse_name_list()
            elif tok.kind == "IDENT" and tok.text == "fermions":
                if fermions is not None:
                    self.fail("duplicate fermions statement", tok)
                self.advance()
                fermions = self.parse_name_list()
            elif tok.kind == "IDENT" and tok.text == "param":
                self.advance()
                pname, spec = self.parse_param_decl(params)
                params[pname] = spec
            elif tok.kind == "IDENT" and tok.text == "flags":
                self.advance()
                flags.update(self.parse_name_list())
            elif tok.kind in ("[", "{"):
                raw_brackets.append(self.parse_bracket_header())
            else:
                self.fail(
                    "expected a declaration or a bracket statement", tok
                )
        self.expect("}")
        if bosons is None and fermions is None:
            self.fail(f"algebra {name!r} declares no generators")
        bosons = bosons or []
        fermions = fermions or []
        names = list(bosons) + list(fermions)
        if len(set(names)) != len(names):
            self.fail(f"algebra {name!r} repeats a generator name")
        for bad in set(names) & set(params):
            self.fail(f"{bad!r} is both a generator and a parameter")
        brackets = self.resolve_brackets(
            raw_brackets, names, len(bosons), params
        )
        block = AlgebraDef(name, bosons, fermions, params, flags, brackets)
        try:
            block.build()
        except ValidationError as exc:
            raise ParseError(
                f"algebra {name!r}: {exc}", 0, 0, self.filename
            ) from exc
        return block

    def parse_name_list(self) -> list:
        self.expect(":")
        names = []
        while self.peek().kind == "IDENT":
            names.append(self.advance().text)
            if self.peek().kind == ",":
                self.advance()
        self.expect(";")
        return names

    # ---- parameters and ranges

    def parse_param_decl(self, existing) -> tuple:
        tok = self.expect("IDENT", "parameter name")
        pname = tok.text
        if pname in existing:
            self.fail(f"duplicate parameter {pname!r}", tok)
        self.expect_ident("in")
        spec = self.parse_range(pname)
        self.expect(";")
        return pname, spec

    def parse_range(self, pname) -> ParamSpec:
        tok = self.peek()
        lo = hi = None
        lo_open = hi_open = True
        if tok.kind == "IDENT" and tok.text == "R":
            self.advance()
        elif tok.kind in ("(", "["):
            lo_open = tok.kind == "("
            self.advance()
            lo = self.parse_bound()
            self.expect(",")
            hi = self.parse_bound()
            close = self.advance()
            if close.kind not in (")", "]"):
                self.fail("expected ')' or ']' closing the range", close)
            hi_open = close.kind == ")"
        else:
            self.fail("expected a range like (0,1], [0,inf), or R", tok)
        excluded = []
        if self.peek().kind == "-":
            self.advance()
            self.expect("{")
            excluded.append(self.parse_signed_rational())
            while self.peek().kind == ",":
                self.advance()
                excluded.append(self.parse_signed_rational())
            self.expect("}")
        return ParamSpec(pname, lo, hi, lo_open=lo_open, hi_open=hi_open,
                         excluded=tuple(excluded))

    def parse_bound(self):
        neg = False
        if self.peek().kind == "-":
            self.advance()
            neg = True
        tok = self.peek()
        if tok.kind == "IDENT" and tok.text in ("inf", "oo"):
            self.advance()
            return None
        value = self.parse_rational_token()
        return -value if neg else value

    def parse_signed_rational(self) -> Fraction:
        neg = False
        if self.peek().kind == "-":
            self.advance()
            neg = True
        value = self.parse_rational_token()
        return -value if neg else value

    def parse_rational_token(self) -> Fraction:
        tok = self.expect("NUMBER", "a rational number")
        if "i" in tok.text:
            self.fail("expected a real number here", tok)
        return Fraction(tok.text)

    # ---- bracket statements

    def parse_bracket_header(self):
        open_tok = self.advance()
        brace = open_tok.kind == "{"
        left = self.expect("IDENT", "a generator name")
        self.expect(",")
        right = self.expect("IDENT", "a generator name")
        close = self.advance()
        if close.kind != ("}" if brace else "]"):
            self.fail("mismatched bracket delimiters", close)
        self.expect("=")
        rhs = self.parse_rhs()
        self.expect(";")
        return (open_tok, brace, left, right, rhs)

    def parse_rhs(self):
        """Sum of terms; each term is a list of coefficient factors and a
        generator token, or the literal 0."""
        tok = self.peek()
        if tok.kind == "NUMBER" and tok.text == "0":
            self.advance()
            return []
        terms = []
        sign = 1
        if self.peek().kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
        terms.append(self.parse_term(sign))
        while self.peek().kind in ("+", "-"):
            sign = -1 if self.advance().kind == "-" else 1
            terms.append(self.parse_term(sign))
        return terms

    def parse_term(self, sign):
        factors = []
        gen_tok = None
        while True:
            tok = self.peek()
            if tok.kind == "NUMBER":
                self.advance()
                factors.append(("scalar", _atom_scalar(tok, self.filename), tok))
            elif tok.kind == "(":
                self.advance()
                pieces = []
                while self.peek().kind != ")":
                    inner = self.advance()
                    if inner.kind == "EOF":
                        self.fail("unterminated parenthesized coefficient", tok)
                    pieces.append(inner.text)
                self.expect(")")
                text = "".join(pieces)
                try:
                    value = parse_scalar(text)
                except ScalarParseError as exc:
                    raise ParseError(
                        f"bad coefficient ({text}): {exc}",
                        tok.line, tok.column, self.filename,
                    ) from exc
                factors.append(("scalar", value, tok))
            elif tok.kind == "IDENT":
                nxt = self.tokens[self.pos + 1]
                if nxt.kind == "*":
                    self.advance()
                    factors.append(("name", tok.text, tok))
                else:
                    gen_tok = self.advance()
                    break
            else:
                self.fail("expected a coefficient or generator", tok)
            if self.peek().kind == "*":
                self.advance()
                continue
            # a factor not followed by '*' must have been the generator
            self.fail("expected '*' or a generator", self.peek())
        return (sign, factors, gen_tok)

    def resolve_brackets(self, raw, names, n_bosons, params):
        """Turn raw bracket statements into (i, j, {k: coeff}) triples."""
        index = {nm: i + 1 for i, nm in enumerate(names)}

        def parity(pos):
            return 0 if pos <= n_bosons else 1

        out = []
        seen = set()
        for open_tok, brace, left, right, rhs in raw:
            for t in (left, right):
                if t.text not in index:
                    self.fail(f"unknown generator {t.text!r}", t)
            i, j = index[left.text], index[right.text]
            if i > j:
                self.fail(
                    "write brackets with generators in declaration order",
                    left,
                )
            both_odd = parity(i) == 1 == parity(j)
            if brace and not both_odd:
                self.fail(
                    "curly brackets are for two odd generators", open_tok
                )
            if not brace and both_odd:
                self.fail(
                    "use curly brackets for two odd generators", open_tok
                )
            if (i, j) in seen:
                self.fail(
                    f"duplicate bracket for ({left.text},{right.text})",
                    open_tok,
                )
            seen.add((i, j))
            comps = {}
            for sign, factors, gen_tok in rhs:
                if gen_tok.text not in index:
                    self.fail(f"unknown generator {gen_tok.text!r}", gen_tok)
                k = index[gen_tok.text]
                if (parity(i) + parity(j)) % 2 != parity(k):
                    self.fail(
                        f"grading: bracket of {left.text} and {right.text} "
                        f"is {'odd' if (parity(i) + parity(j)) % 2 else 'even'}, "
                        f"{gen_tok.text} is not",
                        gen_tok,
                    )
                coeff = as_poly(GScalar(sign))
                for kind, value, tok in factors:
                    if kind == "scalar":
                        coeff = coeff * value
                    else:
                        if value not in params:
                            self.fail(
                                f"unknown parameter {value!r}", tok
                            )
                        coeff = coeff * MultiPoly.var(value)
                prev = comps.get(k)
                comps[k] = coeff if prev is None else prev + coeff
            comps = {
                k: (c.constant_value() if c.is_constant() else c)
                for k, c in comps.items()
                if not c.is_zero()
            }
            if comps:
                out.append((i, j, comps))
        return out

    # ---- pair blocks

    def parse_pair_block(self, algebras) -> PairDef:
        id_tok = self.peek()
        if id_tok.kind == "STRING":
            entry_id = self.advance().text
        else:
            entry_id = self.expect("IDENT", "pair id").text
        self.expect("{")
        table = None
        primal_name = None
        params = {}
        samples = {}
        notes = []
        raw_dual = None
        while self.peek().kind != "}":
            tok = self.expect("IDENT", "a pair statement")
            if tok.text == "table":
                self.expect(":")
                table = int(self.parse_rational_token())
                self.expect(";")
            elif tok.text == "primal":
                self.expect(":")
                primal_name = self.expect("IDENT", "algebra name").text
                self.expect(";")
            elif tok.text == "param":
                pname, spec = self.parse_param_decl(params)
                params[pname] = spec
            elif tok.text == "samples":
                self.expect(":")
                pname = self.expect("IDENT", "parameter name").text
                self.expect("=")
                values = [self.parse_signed_rational()]
                while self.peek().kind == ",":
                    self.advance()
                    values.append(self.parse_signed_rational())
                self.expect(";")
                samples[pname] = values
            elif tok.text == "note":
                self.expect(":")
                notes.append(self.expect("STRING", "a quoted note").text)
                self.expect(";")
            elif tok.text == "dual":
                if raw_dual is not None:
                    self.fail("duplicate dual statement", tok)
                self.expect(":")
                self.expect("{")
                raw_dual = []
                while self.peek().kind in ("[", "{"):
                    raw_dual.append(self.parse_bracket_header())
                self.expect("}")
                if self.peek().kind == ";":
                    self.advance()
            else:
                self.fail(f"unknown pair statement {tok.text!r}", tok)
        self.expect("}")
        if table is None:
            self.fail(f"pair {entry_id!r} needs a table number")
        if primal_name is None:
            self.fail(f"pair {entry_id!r} needs a primal algebra")
        if primal_name not in algebras:
            self.fail(
                f"pair {entry_id!r} references unknown algebra {primal_name!r}"
            )
        primal = algebras[primal_name]
        all_params = dict(primal.params)
        for pname, spec in params.items():
            if pname in all_params:
                self.fail(
                    f"pair parameter {pname!r} shadows a primal parameter"
                )
            all_params[pname] = spec
        dual_names = tuple(
            f"Xt{i + 1}" for i in range(len(primal.gen_names))
        )
        brackets = self.resolve_brackets(
            raw_dual or [], dual_names, len(primal.bosons), all_params
        )
        for pname, values in samples.items():
            if pname not in all_params:
                self.fail(f"samples given for unknown parameter {pname!r}")
            for v in values:
                if not all_params[pname].contains(v):
                    self.fail(
                        f"sample {pname}={v} outside declared range "
                        f"{all_params[pname].range_str()}"
                    )
        entry = PairDef(entry_id, table, primal_name, params, samples,
                        brackets, notes)
        try:
            entry.build_dual(primal.build())
        except ValidationError as exc:
            raise ParseError(
                f"pair {entry_id!r}: {exc}", id_tok.line, id_tok.column,
                self.filename,
            ) from exc
        return entry


def _atom_scalar(tok, filename) -> GScalar:
    try:
        return parse_scalar(tok.text)
    except ScalarParseError as exc:
        raise ParseError(
            f"bad scalar {tok.text!r}: {exc}", tok.line, tok.column, filename
        ) from exc


# -- public entry points ------------------------------------------------------------


def parse_text(text: str, filename="<input>", algebras=None) -> ParsedFile:
    """Parse a definition file.  algebras seeds the name lookup so a pair
    file can reference blocks parsed from a separate algebra file."""
    return _Parser(tokenize(text, filename), filename).parse_file(algebras)


def parse_file(path, algebras=None) -> ParsedFile:
    with open(path, encoding="utf-8") as fh:
        return parse_text(fh.read(), filename=str(path), algebras=algebras)


def parse_dual_statements(text: str, primal: LieSuperAlgebra,
                          extra_params=None, filename="<dual>",
                          gen_names=None) -> DualStructure:
    """Parse a bare statement list like "[Xt1,Xt2]=Xt1; {Xt3,Xt3}=i*Xt1"
    into a dual structure on the primal's mirror basis.

    gen_names overrides the generator spelling; the command line passes
    plain X-names there so dual specs reuse the algebra statement syntax
    unchanged.
    """
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        inner = body[1:-1]
        if inner.count("{") == inner.count("}"):
            body = inner
    if body and not body.rstrip().endswith(";"):
        body = body + ";"
    parser = _Parser(tokenize(body, filename), filename)
    raw = []
    while parser.peek().kind in ("[", "{"):
        raw.append(parser.parse_bracket_header())
    parser.expect("EOF", "end of dual statements")
    dims = primal.dims
    if gen_names is None:
        dual_names = tuple(f"Xt{i}" for i in dims.indices())
    else:
        dual_names = tuple(gen_names)
        if len(dual_names) != dims.total:
            raise ValidationError(
                f"need {dims.total} generator names, got {len(dual_names)}")
    params = dict(primal.params)
    params.update(extra_params or {})
    brackets = parser.resolve_brackets(raw, dual_names, dims.m, params)
    entries = {}
    for i, j, rhs in brackets:
        for k, coeff in rhs.items():
            entries[(i, j, k)] = coeff
    return DualStructure(dims, entries, name="dual", params=params or None)


# -- canonical printing -------------------------------------------------------------


def _format_coefficient(value) -> tuple:
    """Return (sign, text) with text empty for a bare generator."""
    poly = as_poly(value)
    if poly.is_zero():
        return 1, None
    if poly.is_constant():
        c = poly.constant_value()
        sign = 1
        if c.re < 0 or (c.re == 0 and c.im < 0):
            sign = -1
            c = -c
        if c == GScalar(1):
            return sign, ""
        text = str(c)
        if c.re != 0 and c.im != 0:
            text = f"({text})"
        return sign, text
    if len(poly.terms) == 1:
        (exps, coeff), = poly.terms.items()
        sign, base = _format_coefficient(coeff)
        parts = [base] if base else []
        for var, e in zip(poly.variables, exps):
            parts.extend([var] * e)
        return sign, "*".join(parts)
    raise ValidationError(
        f"coefficient {poly} has no canonical text form"
    )


def _format_statements(dims, gen_names, components) -> list:
    """components: dict (i, j, k) -> value with i <= j (canonical side)."""
    by_pair = {}
    for (i, j, k), value in sorted(components.items()):
        by_pair.setdefault((i, j), {})[k] = value
    lines = []
    for (i, j), comps in sorted(by_pair.items()):
        both_odd = dims.parity(i) == 1 == dims.parity(j)
        open_ch, close_ch = ("{", "}") if both_odd else ("[", "]")
        rhs_bits = []
        for k in sorted(comps):
            sign, text = _format_coefficient(comps[k])
            if text is None:
                continue
            term = f"{text}*{gen_names[k - 1]}" if text else gen_names[k - 1]
            if not rhs_bits:
                rhs_bits.append(("-" if sign < 0 else "") + term)
            else:
                rhs_bits.append(("- " if sign < 0 else "+ ") + term)
        rhs = " ".join(rhs_bits) if rhs_bits else "0"
        lines.append(
            f"{open_ch}{gen_names[i - 1]}, {gen_names[j - 1]}{close_ch} = {rhs};"
        )
    return lines


def _default_names(dims, prefix="X"):
    return tuple(f"{prefix}{i}" for i in dims.indices())


def format_algebra(g: LieSuperAlgebra, gen_names=None, name=None) -> str:
    """Canonical block text for an algebra (round-trips through parse)."""
    dims = g.dims
    names = tuple(gen_names) if gen_names else _default_names(dims)
    lines = [f"algebra {name or g.name} {{"]
    bosons = " ".join(names[:dims.m])
    fermions = " ".join(names[dims.m:])
    if bosons:
        lines.append(f"  bosons: {bosons};")
    if fermions:
        lines.append(f"  fermions: {fermions};")
    for pname in sorted(g.params):
        lines.append(f"  param {pname} in {g.params[pname].range_str()};")
    if not g.check_reality:
        lines.append("  flags: nonstandard_reality;")
    canonical = {
        key: g.f[key]
        for key in g.f
        if key[0] < key[1] or (key[0] == key[1] and dims.parity(key[0]))
    }
    for stmt in _format_statements(dims, names, canonical):
        lines.append("  " + stmt)
    lines.append("}")
    return "\n".join(lines) + "\n"


def format_dual(d: DualStructure, gen_names=None) -> str:
    """Canonical statement list for a dual structure on Xt generators."""
    dims = d.dims
    names = tuple(gen_names) if gen_names else _default_names(dims, "Xt")
    canonical = {
        key: d.ft[key]
        for key in d.ft
        if key[0] < key[1] or (key[0] == key[1] and dims.parity(key[0]))
    }
    return " ".join(_format_statements(dims, names, canonical))
