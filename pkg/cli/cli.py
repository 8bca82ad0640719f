"""
Línea de órdenes de fovec: argumentos, caché, formatos y códigos de salida

Códigos de salida: 0 éxito, 1 verificación fallida, 2 parámetros inválidos.
"""

import argparse
import sys
import time
import traceback

from exactlin import AlgebraError, ParameterError

from .cache import ARTIFACT_VERSION, cache_key, get_cache_dir, get_default_level, load_result, save_result
from .commands import COEFFICIENTS, COMMANDS
from .output import format_json, render

UNCACHED = ("verify-all",)
COMMON = ("command", "format", "cache_dir")


def int_list(text):
    """'1,1' -> [1, 1]; '' -> []"""
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"se esperaba una lista de enteros separada por comas: {text!r}")


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("table", "json", "csv"), default="table",
                        help="Formato de salida")
    common.add_argument("--cache-dir", default=None,
                        help="Directorio de caché (FOVEC_CACHE tiene prioridad)")

    parser = argparse.ArgumentParser(
        prog="fovec", description="Cohomología exacta de campos vectoriales formales"
    )
    subparsers = parser.add_subparsers(dest="command", required=True)

    def command(name, help_text):
        return subparsers.add_parser(name, help=help_text, parents=[common])

    wn = command("wn-cohomology", "H(W_n; S^m W_n*) en peso cero")
    wn.add_argument("--n", type=int, required=True)
    wn.add_argument("--sym", type=int, default=0, help="Potencia m de S^m W_n*")
    wn.add_argument("--max-degree", type=int, default=5)
    wn.add_argument("--sector", choices=("euler", "torus"), default="euler")

    flag = command("flag-cohomology", "H(W(n_0,...,n_k); S^m)")
    flag.add_argument("--blocks", type=int_list, required=True)
    flag.add_argument("--sym", type=int, default=0)
    flag.add_argument("--max-degree", type=int, default=6)

    rel = command("relative", "Cohomología relativa a la parte gl canónica")
    rel.add_argument("--family", choices=("W", "Flag", "WL"), default="W")
    rel.add_argument("--shape", type=int_list, required=True)
    rel.add_argument("--sym", type=int, default=0)
    rel.add_argument("--max-degree", type=int, default=4)

    wl = command("wl-cohomology", "H(WL(m|n), gl_m+gl_n; k)")
    wl.add_argument("--m", type=int, required=True)
    wl.add_argument("--n", type=int, required=True)
    wl.add_argument("--max-degree", type=int, default=None)

    weyl = command("weyl-gl1", "Cohomología de W(1,...,1) con N bloques")
    weyl.add_argument("--N", type=int, required=True)

    trans = command("transgression", "Complejo de transgresión truncado")
    trans.add_argument("--blocks", type=int_list, required=True)
    trans.add_argument("--direct", action="store_true", help="Comparar con el complejo directo")

    para = command("parabolic-verify", "Verificaciones sobre b ⊂ gl_{m+n}")
    para.add_argument("--check", choices=("vanishing", "ext", "degeneration"), required=True)
    para.add_argument("--m", type=int, required=True)
    para.add_argument("--n", type=int, required=True)
    para.add_argument("--partition", type=int_list, default=[])
    para.add_argument("--coefficients", choices=COEFFICIENTS, default="trivial")
    para.add_argument("--highest", type=int_list, default=[])
    para.add_argument("--levi-weight", type=int_list, default=[])

    ser = command("series", "Series de Poincaré cerradas")
    ser.add_argument("--kind", choices=("catalan", "grassmannian", "gl", "weyl-gl1", "flag", "wl"), required=True)
    ser.add_argument("--N", type=int, default=None)
    ser.add_argument("--m", type=int, default=None)
    ser.add_argument("--n", type=int, default=None)
    ser.add_argument("--blocks", type=int_list, default=[])

    coc = command("cocycle-verify", "Cociclos explícitos")
    coc.add_argument("--kind", choices=("a", "wheel", "xi"), required=True)
    coc.add_argument("--m", type=int, default=None)
    coc.add_argument("--n", type=int, default=None)
    coc.add_argument("--r", type=int, default=None)

    ver = command("verify-all", "Batería de aceptación")
    ver.add_argument("--level", choices=("quick", "full"), default=None,
                     help="Por defecto FOVEC_LEVEL o quick")

    obs = command("obstruction", "Cota de grado de la obstrucción")
    obs.add_argument("--n", type=int, required=True)
    return parser


def _params(args):
    params = {key: value for key, value in vars(args).items() if key not in COMMON}
    if args.command == "verify-all" and params.get("level") is None:
        params["level"] = get_default_level()
    return params


def _compute(command, params, cache_dir):
    if command in UNCACHED or not cache_dir:
        return COMMANDS[command](params)
    key = cache_key(command, params)
    cached = load_result(cache_dir, key)
    if cached is not None:
        print(f"[INFO] Resultado leído de la caché ({key[:12]})", file=sys.stderr)
        return cached
    result = COMMANDS[command](params)
    save_result(cache_dir, key, command, params, result)
    return result


def _error_document(command, params, error):
    return {
        "command": command,
        "params": params,
        "error": {"code": getattr(error, "code", "INVALID_PARAMETERS"), "message": str(error)},
        "artifact_version": ARTIFACT_VERSION,
    }


def run(argv=None):
    """
    Ejecuta un comando y escribe el resultado en stdout

    Args:
        argv (list): Argumentos (por defecto sys.argv[1:])

    Returns:
        int: Código de salida
    """
    args = build_parser().parse_args(argv)
    command, params = args.command, {}
    try:
        params = _params(args)
        cache_dir = get_cache_dir(args.cache_dir)
        print(f"[INFO] Ejecutando {command}...", file=sys.stderr)
        start = time.perf_counter()
        result = _compute(command, params, cache_dir)
        document = {
            "command": command,
            "params": params,
            "result": result,
            "wall_time_ms": round((time.perf_counter() - start) * 1000, 3),
            "artifact_version": ARTIFACT_VERSION,
        }
        print(render(args.format, command, document))
        if command == "verify-all" and result["failed"]:
            return 1
        return 0
    except ParameterError as e:
        code, error = 2, e
    except AlgebraError as e:
        code, error = 1, e
    except ValueError as e:
        code, error = 2, e
    except KeyboardInterrupt:
        print("\n[INFO] Ejecución interrumpida por el usuario", file=sys.stderr)
        return 1
    except Exception as e:
        print(f"\n[ERROR] Error inesperado: {e}", file=sys.stderr)
        traceback.print_exc()
        return 1

    print(f"[ERROR] {error}", file=sys.stderr)
    if args.format == "json":
        print(format_json(_error_document(command, params, error)))
    return code


def main():
    return run()
