# -*- coding: utf-8 -*-


import logging
import time
from argparse import Namespace
from collections.abc import Callable
from collections.abc import Sequence
from typing import Any

from ..algebra import BasePointSpec
from ..algebra import FieldSpec
from ..algebra import RationalField
from ..algebra import RawVector
from ..algebra import make_rng
from ..algebra import normalize_point
from ..algebra import polys_of
from ..algebra import same_point
from ..algebra import vanishing_system
from ..geometry import BlowupFactorization
from ..geometry import CiInstance
from ..geometry import PencilDimWrong
from ..geometry import PointConfig
from ..geometry import VeroneseResult
from ..geometry import blowup_h0
from ..geometry import conic_through_five
from ..geometry import cubic_pencil_ninth
from ..geometry import eight_points_p4
from ..geometry import family_dim
from ..geometry import gale_transform
from ..geometry import gen_ci_instance
from ..geometry import gen_coble_instance
from ..geometry import gen_cubic_pencil_base
from ..geometry import gen_general_points
from ..geometry import gen_seven_points_p3
from ..geometry import prepare_coble
from ..geometry import require_certificate
from ..geometry import rnc_eval
from ..geometry import rnc_through
from ..geometry import seven_points_p3
from ..geometry import two_sextics_veronese
from ..geometry import veronese_factorizations
from ..geometry import veronese_from_ci33
from .command_nodes import CliArgumentParser
from .command_nodes import cubic_pair
from .command_nodes import degree_pair
from .command_nodes import field_flag
from .command_nodes import multiplicities
from .command_nodes import non_negative_int
from .command_nodes import positive_int
from .command_nodes import seed_value
from .config import Config
from .config import certificate_options
from .config import intersection_options
from .helper import h
from .helper import initialize as init_helper
from .report import INPUTS_REF
from .report import Report
from .report import VerificationFailed
from .report import distinct_systems_certificate
from .report import encode_points
from .report import encode_poly
from .report import encode_vector
from .report import evaluation_certificate
from .report import family_dimension_certificate
from .report import gale_dual_certificate
from .report import output_ref
from .report import system_dimension_certificate
from .report import transport_certificate
from .report import vanishing_certificate
from .report import verify_report
from .utils import CommandDisabled
from .utils import ConfigFile
from .utils import ExitCode
from .utils import MissingArgument
from .utils import digest
from .utils import load_document
from .utils import read_config_file
from .utils import suppress
from .utils import write_document

logger = logging.getLogger(__name__)

LOG_FORMAT = "[%(levelname)s] %(name)s: %(message)s"

type Handler = Callable[[Namespace], Report | dict[str, Any]]


def _input(args: Namespace) -> ConfigFile:
    if args.input is None:
        raise MissingArgument("--input")
    return read_config_file(args.input, args.field)


def _field(args: Namespace) -> FieldSpec:
    if args.field is None:
        raise MissingArgument("--field")
    field: FieldSpec = args.field
    return field


def _seed(args: Namespace) -> int:
    if args.seed is None:
        raise MissingArgument("--seed")
    seed: int = args.seed
    return seed


def _search_seed(args: Namespace) -> int:
    """
    证书搜索的种子，未指定 ``--seed`` 时取配置项 ``budgets.certificate_seed``
    """
    if args.seed is None:
        logger.debug("no --seed given, certificate search uses seed %d", Config.Budgets.CertificateSeed)
        return Config.Budgets.CertificateSeed
    seed: int = args.seed
    return seed


def gale(args: Namespace) -> Report:
    config = _input(args)
    dual = gale_transform(config.points)
    certificate = require_certificate(config.points, dual, seed=_search_seed(args), **certificate_options())
    orthogonal = (dual.matrix.transpose() @ config.points.matrix).is_zero()
    return Report(
        "gale", config.field, config.points,
        outputs={
            "dual": dual.to_strings(),
            "orthogonal": orthogonal,
        },
        certificates=[
            gale_dual_certificate("gale_dual", INPUTS_REF, output_ref("dual"), certificate),
        ],
    )


def rnc(args: Namespace) -> Report:
    config = _input(args)
    param = rnc_through(config.points)
    parameters = param.source_points
    hits = [
        same_point(config.field, rnc_eval(param, t), p) for t, p in zip(parameters.points, config.points.points)
    ]
    if not all(hits):
        raise VerificationFailed("parametrization", "a point is missed by the curve")
    certificate = require_certificate(config.points, parameters, seed=_search_seed(args), **certificate_options())
    return Report(
        "rnc", config.field, config.points,
        outputs={
            "degree": param.s,
            "parameters": parameters.to_strings(),
            "matrix": param.M.to_strings(),
            "hits": hits,
        },
        certificates=[
            gale_dual_certificate("gale_dual", INPUTS_REF, output_ref("parameters"), certificate),
            transport_certificate(
                "parametrization", output_ref("parameters"), INPUTS_REF, output_ref("matrix"), 1,
                veronese_degree=param.s,
            ),
        ],
    )


def conic5(args: Namespace) -> Report:
    config = _input(args)
    conic = conic_through_five(config.points)
    return Report(
        "conic5", config.field, config.points,
        outputs={"conic": encode_poly(conic)},
        certificates=[
            vanishing_certificate("conic", output_ref("conic"), [INPUTS_REF]),
            system_dimension_certificate("unique", 2, INPUTS_REF, [1] * config.points.count, 1),
        ],
    )


def pencil9(args: Namespace) -> Report:
    config = _input(args)
    ninth = cubic_pencil_ninth(config.points, **intersection_options())
    return Report(
        "pencil9", config.field, config.points,
        outputs={
            "ninth": encode_vector(config.field, ninth.point),
            "cubics": [encode_poly(f) for f in ninth.cubics],
        },
        certificates=[
            vanishing_certificate("cubics", output_ref("cubics"), [INPUTS_REF, output_ref("ninth")]),
            system_dimension_certificate("pencil", 3, INPUTS_REF, [1] * config.points.count, 2),
        ],
    )


def _factorization_report(
        command: str,
        config: ConfigFile,
        factorization: BlowupFactorization,
        search_seed: int,
        **extra: Any,
) -> Report:
    field = config.field
    excess = [e.point for e in factorization.excess]
    conics = polys_of(field, factorization.system, 2)
    gale_certificate = require_certificate(
        config.points, factorization.gamma2, seed=search_seed, **certificate_options()
    )
    return Report(
        command, field, config.points,
        outputs={
            **extra,
            "gale": factorization.gamma2.to_strings(),
            "excess": encode_points(field, excess),
            "cubics": [encode_poly(f) for f in factorization.cubics],
            "conics": [encode_poly(q) for q in conics],
            "images": factorization.images.to_strings(),
            "matrix": factorization.transport.to_strings(),
            "target_dim": factorization.target_dim,
        },
        certificates=[
            gale_dual_certificate("input_gale", INPUTS_REF, output_ref("gale"), gale_certificate),
            vanishing_certificate("cubics", output_ref("cubics"), [output_ref("gale"), output_ref("excess")]),
            vanishing_certificate("conics", output_ref("conics"), [output_ref("excess")]),
            system_dimension_certificate("conic_system", 2, output_ref("excess"), [1] * len(excess), len(conics)),
            evaluation_certificate(
                "images", output_ref("gale"), output_ref("images"), polys_ref=output_ref("conics")
            ),
            gale_dual_certificate("factor_gale", output_ref("gale"), output_ref("images"), factorization.certificate),
            transport_certificate(
                "transport", output_ref("images"), INPUTS_REF, output_ref("matrix"), factorization.transport_dim
            ),
        ],
    )


def eightp4(args: Namespace) -> Report:
    config = _input(args)
    factorization = eight_points_p4(config.points, **intersection_options(), **certificate_options())
    return _factorization_report("eightp4", config, factorization, _search_seed(args))


def sevenp3(args: Namespace) -> Report:
    config = _input(args)
    factorization = seven_points_p3(config.points, args.pair, **intersection_options(), **certificate_options())
    return _factorization_report("sevenp3", config, factorization, _search_seed(args), pair=list(args.pair))


def ci33(args: Namespace) -> Report:
    config = _input(args)
    field = config.field
    pencil = vanishing_system(field, 3, (BasePointSpec(p) for p in config.points.points))
    if pencil.dim != 2:
        raise PencilDimWrong(pencil.dim)
    f, g = polys_of(field, pencil, 3)
    ci = CiInstance(3, 3, f, g, config.points)
    veronese = veronese_from_ci33(ci, seed=_search_seed(args), **certificate_options())
    return Report(
        "ci33", field, config.points,
        outputs={
            "cubics": [encode_poly(f), encode_poly(g)],
            "images": veronese.images.to_strings(),
        },
        certificates=[
            vanishing_certificate("cubics", output_ref("cubics"), [INPUTS_REF]),
            system_dimension_certificate("pencil", 3, INPUTS_REF, [1] * config.points.count, 2),
            evaluation_certificate("veronese", INPUTS_REF, output_ref("images"), degree=2),
            gale_dual_certificate("gale_dual", INPUTS_REF, output_ref("images"), veronese.certificate),
        ],
    )


def _surface_samples(result: VeroneseResult, count: int, seed: int) -> list[RawVector]:
    """
    平面上随机点在 ``P⁵`` 中的像
    """
    field = result.transport.field
    triple = {p.coords for p in result.triple}
    rng = make_rng(seed, count, 6)
    samples: list[RawVector] = []
    for _ in range(100 * count):
        if len(samples) == count:
            break
        raw = tuple(field.random_raw(rng) for _ in range(3))
        if all(x == 0 for x in raw):
            continue
        point = normalize_point(field, raw)
        if point not in triple:
            samples.append(result.map_point(point))
    return samples


def coble9(args: Namespace) -> Report:
    if args.gen:
        field = _field(args)
        points = gen_coble_instance(
            field, _seed(args), enumeration_limit=Config.Budgets.EnumerationLimit
        ).points
    else:
        config = _input(args)
        field, points = config.field, config.points
    seed = _search_seed(args)
    samples = Config.Coble9.Samples if args.samples is None else args.samples

    setup = prepare_coble(points, require_four=True, enumeration_limit=Config.Budgets.EnumerationLimit)
    results = veronese_factorizations(
        setup, seed=seed, samples=samples, triple_retries=Config.Budgets.TripleRetries
    )
    sextic = two_sextics_veronese(setup, results, samples=samples, seed=seed)
    gale_certificate = require_certificate(points, setup.gamma2, seed=seed, **certificate_options())

    certificates = [
        gale_dual_certificate("gale_dual", INPUTS_REF, output_ref("gale"), gale_certificate),
        vanishing_certificate("cubic", output_ref("cubic"), [output_ref("gale")]),
    ]
    veronese = []
    for k, result in enumerate(results):
        veronese.append({
            "triple": encode_points(field, [p.coords for p in result.triple]),
            "quartics": [encode_poly(q) for q in polys_of(field, result.node_system, 4)],
            "images": result.images.to_strings(),
            "matrix": result.transport.to_strings(),
            "quadrics": [encode_poly(q) for q in polys_of(field, result.quadrics, 2, 6)],
            "surface": encode_points(field, _surface_samples(result, samples, seed + k)),
        })
        base = ("veronese", k)
        certificates += [
            vanishing_certificate(
                f"veronese.{k}.quartics", output_ref(*base, "quartics"), [output_ref(*base, "triple")], 2
            ),
            evaluation_certificate(
                f"veronese.{k}.images", output_ref("gale"), output_ref(*base, "images"),
                polys_ref=output_ref(*base, "quartics"),
            ),
            transport_certificate(
                f"veronese.{k}.transport", output_ref(*base, "images"), INPUTS_REF, output_ref(*base, "matrix"), 1
            ),
            vanishing_certificate(
                f"veronese.{k}.quadrics", output_ref(*base, "quadrics"), [output_ref(*base, "surface"), INPUTS_REF]
            ),
        ]
    if len(results) > 1:
        certificates.append(distinct_systems_certificate(
            "veronese.distinct", [output_ref("veronese", k, "quadrics") for k in range(len(results))]
        ))
    return Report(
        "coble9", field, points,
        outputs={
            "factorizations": len(results),
            "gale": setup.gamma2.to_strings(),
            "cubic": encode_poly(setup.curve.f),
            "veronese": veronese,
            "sextic": {
                "curve_samples": sextic.curve_samples,
                "distinct_pairs": [list(pair) for pair in sextic.distinct_pairs],
            },
        },
        certificates=certificates,
    )


def verify(args: Namespace) -> dict[str, Any]:
    path = args.report if args.report is not None else args.input
    if path is None:
        raise MissingArgument("report")
    data = load_document(path)
    passed = verify_report(data)
    h.reply("message.success.verified", count=len(passed))
    return {
        "command": "verify",
        "report": digest(data),
        "passed": passed,
        "status": "ok",
    }


def gen(args: Namespace) -> dict[str, Any]:
    field = _field(args)
    seed = _seed(args)
    budgets = Config.Budgets
    meta: dict[str, Any] = {"seed": seed, "kind": args.kind}
    points: PointConfig
    match args.kind:
        case "general":
            if args.count is None or args.dim is None:
                raise MissingArgument("--count/--dim")
            points = gen_general_points(
                field, args.count, args.dim, seed, resample=budgets.Resample, subset_checks=budgets.SubsetChecks
            )
            meta["description"] = f"{args.count} general points in P^{args.dim}"
        case "pencil":
            base = gen_cubic_pencil_base(field, seed, budget=budgets.Resample, retries=budgets.IntersectionRetries)
            points = base.points
            meta["description"] = "base locus of a cubic pencil"
            meta["curves"] = [encode_poly(base.f), encode_poly(base.g)]
        case "seven":
            pairs = args.pair or [(0, 1)]
            points = gen_seven_points_p3(
                field, seed, pairs, resample=budgets.Resample, retries=budgets.IntersectionRetries
            )
            meta["description"] = "7 points in P^3 with rational excess pairs"
            meta["pairs"] = [list(pair) for pair in pairs]
        case "coble":
            instance = gen_coble_instance(field, seed, enumeration_limit=budgets.EnumerationLimit)
            points = instance.points
            meta["description"] = "9 points in P^5 with four Veronese factorizations"
            meta["cubic"] = encode_poly(instance.cubic)
        case _:
            d1, d2 = args.degrees or (3, 3)
            ci = gen_ci_instance(field, d1, d2, seed, budget=budgets.Resample)
            points = ci.points
            meta["description"] = f"({ci.d1}, {ci.d2}) complete intersection"
            meta["curves"] = [encode_poly(ci.f), encode_poly(ci.g)]
    return ConfigFile(field, points, meta).to_json()


def h0(args: Namespace) -> Report:
    field = _field(args)
    mults: tuple[int, ...] = args.mult
    # 少于三个点时无法张满 P²，多取几个再截断
    general = gen_general_points(
        field, max(len(mults), 3), 2, _seed(args),
        resample=Config.Budgets.Resample, subset_checks=Config.Budgets.SubsetChecks,
    )
    base = general.points[:len(mults)]
    value = blowup_h0(field, args.degree, (BasePointSpec(p, m) for p, m in zip(base, mults)))
    return Report(
        "h0", field, None,
        outputs={
            "degree": args.degree,
            "multiplicities": list(mults),
            "base": encode_points(field, base),
            "h0": value,
        },
        certificates=[
            system_dimension_certificate(
                "h0", output_ref("degree"), output_ref("base"), output_ref("multiplicities"), output_ref("h0")
            ),
        ],
    )


def family(args: Namespace) -> Report:
    field = RationalField() if args.field is None else args.field
    degrees = [args.degree] if args.degree is not None else list(range(3, args.max_degree + 1))
    table = [{"degree": d, "dimension": family_dim(d)} for d in degrees]
    return Report(
        "family", field, None,
        outputs={"table": table},
        certificates=[
            family_dimension_certificate(
                f"family.{i}", output_ref("table", i, "degree"), output_ref("table", i, "dimension")
            )
            for i in range(len(table))
        ],
    )


HANDLERS: dict[str, Handler] = {
    "gale": gale,
    "rnc": rnc,
    "conic5": conic5,
    "pencil9": pencil9,
    "eightp4": eightp4,
    "sevenp3": sevenp3,
    "coble9": coble9,
    "ci33": ci33,
    "verify": verify,
    "gen": gen,
    "h0": h0,
    "family": family,
}


def build_parser() -> CliArgumentParser:
    """
    构造命令行解析器，子命令名取自配置
    """
    common = CliArgumentParser(add_help=False)
    common.add_argument("--input", help=h.tr("help.option.input"))
    common.add_argument("--out", help=h.tr("help.option.out"))
    common.add_argument("--field", type=field_flag, help=h.tr("help.option.field"))
    common.add_argument("--seed", type=seed_value, help=h.tr("help.option.seed"))

    parser = CliArgumentParser(prog="gale-goppa", description=h.tr("help.description"))
    subparsers = parser.add_subparsers(dest="command_name", required=True)
    commands = Config.commands()
    parsers = {}
    for key in HANDLERS:
        sub = subparsers.add_parser(commands[key].Name, parents=[common], help=h.tr(f"help.command.{key}"))
        sub.set_defaults(command=key)
        parsers[key] = sub

    parsers["sevenp3"].add_argument("--pair", type=cubic_pair, default=(0, 1), help=h.tr("help.option.pair"))
    parsers["coble9"].add_argument("--gen", action="store_true", help=h.tr("help.option.gen"))
    parsers["coble9"].add_argument("--samples", type=positive_int, help=h.tr("help.option.samples"))
    parsers["verify"].add_argument("report", nargs='?', help=h.tr("help.option.report"))
    parsers["gen"].add_argument(
        "--kind", choices=("general", "pencil", "seven", "coble", "ci"), default="general",
        help=h.tr("help.option.kind"),
    )
    parsers["gen"].add_argument("--count", type=positive_int, help=h.tr("help.option.count"))
    parsers["gen"].add_argument("--dim", type=positive_int, help=h.tr("help.option.dim"))
    parsers["gen"].add_argument("--degrees", type=degree_pair, help=h.tr("help.option.degrees"))
    parsers["gen"].add_argument("--pair", type=cubic_pair, action="append", help=h.tr("help.option.pair"))
    parsers["h0"].add_argument("--degree", type=non_negative_int, required=True, help=h.tr("help.option.degree"))
    parsers["h0"].add_argument("--mult", type=multiplicities, required=True, help=h.tr("help.option.mult"))
    parsers["family"].add_argument("--degree", type=positive_int, help=h.tr("help.option.degree"))
    parsers["family"].add_argument("--max-degree", type=positive_int, default=12, help=h.tr("help.option.max_degree"))
    return parser


@suppress
def run(argv: Sequence[str] | None = None) -> int:
    """
    解析参数并执行一个子命令

    :return: 退出码
    :rtype: int
    """
    args = build_parser().parse_args(argv)
    if not Config.commands()[args.command].Enabled:
        raise CommandDisabled(args.command)

    start = time.perf_counter()
    result = HANDLERS[args.command](args)
    if isinstance(result, Report):
        if Config.RecordTimings:
            result.timings = {"total": time.perf_counter() - start}
        document = result.to_json()
    else:
        document = result
    logger.debug("%s finished in %.3fs", args.command, time.perf_counter() - start)
    write_document(document, args.out, indent=Config.ReportIndent)
    return ExitCode.OK


@suppress
def initialize() -> int:
    """
    读取配置并初始化消息与日志
    """
    Config.initialize()
    init_helper(Config.Language)
    logging.basicConfig(level=Config.LogLevel, format=LOG_FORMAT)
    return ExitCode.OK


def main(argv: Sequence[str] | None = None) -> int:
    """
    命令行入口

    :param argv: 参数，默认取 ``sys.argv[1:]``
    :type argv: Sequence[str] | None

    :return: 退出码
    :rtype: int
    """
    code = initialize()
    if code != ExitCode.OK:
        return code
    return run(argv)


__all__ = (
    "HANDLERS",

    "gale",
    "rnc",
    "conic5",
    "pencil9",
    "eightp4",
    "sevenp3",
    "coble9",
    "ci33",
    "verify",
    "gen",
    "h0",
    "family",

    "build_parser",
    "run",
    "initialize",
    "main",
)
