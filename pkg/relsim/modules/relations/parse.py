"""
One-line text form of relation specs::

    total
    identity
    newton1 H=zero
    newton2 H=cyclic:1/6
    pencil1 u=(3/4,0,0,5/4) H=gen:1;0+1*r2 lambda=1
    pencil2 u=(3/4,0,0,5/4) H=zero lambda=1
    stdsim u=(0,0,0,1) lambda=1
    halfcone c=1 sign=+
    coset base=(0,0,0,0) bound=6 t=(1,0,0,0);(0,0,0,1)

Tokens are whitespace separated, so literals inside a token are written
without spaces. ``coset`` takes translation generators only.
"""
from relsim.core.errors import ParseError, PreconditionError
from relsim.modules.groups import translation
from relsim.modules.scalar import Matrix, parse_scalar
from relsim.modules.spacetime import MetricParams, format_tuple, parse_event, parse_vec4
from .specs import (
    ConeSign,
    CosetRelation,
    HalfCone,
    Identity,
    NewtonTypeI,
    NewtonTypeII,
    PencilTypeI,
    PencilTypeII,
    RelationSpec,
    StandardSim,
    Total,
)
from .subgroups import RealSubgroupSpec, format_subgroup

_KEYS = {
    "total": set(),
    "identity": set(),
    "newton1": {"H"},
    "newton2": {"H"},
    "pencil1": {"u", "H", "lambda"},
    "pencil2": {"u", "H", "lambda"},
    "stdsim": {"u", "lambda"},
    "halfcone": {"c", "sign"},
    "coset": {"base", "bound", "t"},
}
_OPTIONAL = {"lambda", "sign", "bound"}


def parse_subgroup(text: str, source: str = "<string>") -> RealSubgroupSpec:
    kind, _, body = text.partition(":")
    kind = kind.strip().lower()
    if kind == "zero" and not body:
        return RealSubgroupSpec.zero()
    if kind == "full" and not body:
        return RealSubgroupSpec.full()
    try:
        if kind == "cyclic":
            return RealSubgroupSpec.cyclic(parse_scalar(body, source))
        if kind == "gen":
            return RealSubgroupSpec.generated(parse_scalar(p, source) for p in body.split(";") if p.strip())
    except PreconditionError as exc:
        raise ParseError(str(exc), source) from None
    raise ParseError(f"unknown subgroup {text!r} (zero, full, cyclic:<S>, gen:<S>;...)", source)


def parse_relation_spec(text: str, source: str = "<string>") -> RelationSpec:
    tokens = text.split()
    if not tokens:
        raise ParseError("empty relation spec", source)
    tag = tokens[0].lower()
    if tag not in _KEYS:
        raise ParseError(f"unknown relation {tokens[0]!r}; expected one of {sorted(_KEYS)}", source)
    params: dict[str, str] = {}
    for token in tokens[1:]:
        key, eq, value = token.partition("=")
        if not eq or key not in _KEYS[tag]:
            raise ParseError(f"unexpected parameter {token!r} for {tag}", source)
        params[key] = value
    missing = _KEYS[tag] - _OPTIONAL - set(params)
    if missing:
        raise ParseError(f"{tag} needs {', '.join(sorted(missing))}", source)

    try:
        m = MetricParams(parse_scalar(params.get("lambda", "1"), source))
        if tag == "total":
            return Total()
        if tag == "identity":
            return Identity()
        if tag in ("newton1", "newton2"):
            H = parse_subgroup(params["H"], source)
            return NewtonTypeI(H) if tag == "newton1" else NewtonTypeII(H)
        if tag in ("pencil1", "pencil2"):
            u = parse_vec4(params["u"], source)
            H = parse_subgroup(params["H"], source)
            return (PencilTypeI if tag == "pencil1" else PencilTypeII)(u, H, m)
        if tag == "stdsim":
            return StandardSim(parse_vec4(params["u"], source), m)
        if tag == "halfcone":
            sign = params.get("sign", "+")
            if sign not in ("+", "-"):
                raise ParseError(f"halfcone sign must be + or -, got {sign!r}", source)
            return HalfCone(parse_scalar(params["c"], source), ConeSign(sign))
        gens = tuple(
            translation(parse_vec4(v, source)) for v in params["t"].split(";") if v.strip()
        )
        bound = params.get("bound")
        base = parse_event(params["base"], source)
        if bound is None:
            return CosetRelation(gens, base)
        if not bound.isdigit():
            raise ParseError(f"bound must be a non-negative integer, got {bound!r}", source)
        return CosetRelation(gens, base, int(bound))
    except PreconditionError as exc:
        raise ParseError(str(exc), source) from None


def _compact(values) -> str:
    return format_tuple(values).replace(" ", "")


def format_relation_spec(spec: RelationSpec) -> str:
    if isinstance(spec, (Total, Identity)):
        return spec.name
    if isinstance(spec, (NewtonTypeI, NewtonTypeII)):
        return f"{spec.name} H={format_subgroup(spec.H)}"
    if isinstance(spec, (PencilTypeI, PencilTypeII)):
        lam = str(spec.m.lam).replace(" ", "")
        return f"{spec.name} u={_compact(spec.u)} H={format_subgroup(spec.H)} lambda={lam}"
    if isinstance(spec, StandardSim):
        lam = str(spec.m.lam).replace(" ", "")
        return f"stdsim u={_compact(spec.u)} lambda={lam}"
    if isinstance(spec, HalfCone):
        return f"halfcone c={str(spec.c_hat).replace(' ', '')} sign={spec.sign.value}"
    if isinstance(spec, CosetRelation):
        identity = Matrix.identity(4)
        if any(g.linear != identity for g in spec.gens):
            raise PreconditionError("only translation cosets have a text form")
        t = ";".join(_compact(g.translation) for g in spec.gens)
        return f"coset base={_compact(spec.base)} bound={spec.word_bound} t={t}"
    raise PreconditionError(f"no text form for {spec!r}")
