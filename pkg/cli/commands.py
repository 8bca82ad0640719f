"""
Cálculos de cada comando de la línea de órdenes

Cada función recibe los parámetros ya normalizados (dict serializable) y
devuelve un resultado serializable en JSON.
"""

import random
import sys
from itertools import permutations

from cecomplex import (
    build_absolute_complex,
    build_relative_complex,
    filtered_relative_complex,
    finite_pair_relative_cohomology,
    finite_relative_complex,
    hochschild_serre_pages,
    support,
)
from cocycles import a_cocycles, class_rank, relative_block, wheel_cocycle, xi_lambda
from combinat import (
    Permutation,
    catalan,
    dims_from_poly,
    dot_action,
    gl_cohomology_poincare,
    grassmannian_poincare,
    howe_exterior_check,
    partitions_bounded,
    poly_from_dims,
)
from exactlin import AlgebraError, ParameterError, VerificationError
from liealg import AlgebraFamily, ModuleSpec, basis_at_weight, gl, jacobi_check, levi
from liealg import parabolic as parabolic_algebra
from parabolic import (
    ParabolicSetup,
    adjoint_module,
    tautological_module,
    trivial_module,
    verify_b_vanishing,
    verify_ext_prediction,
    verify_grassmannian_degeneration,
)
from weyltrunc import (
    TransgressionComplex,
    gl1_flag_cohomology,
    poincare_formula,
    relative_flag_poincare,
    transgression_cohomology,
    truncated_polynomial_poincare,
    truncated_weyl_chain_dims,
)

COEFFICIENTS = ("trivial", "tautological", "adjoint")


def _dims_json(dims):
    return {str(degree): dim for degree, dim in sorted(support(dims).items())}


def _coeffs(sym):
    return ModuleSpec.sym(sym) if sym else ModuleSpec.trivial()


def _positive(name, value, minimum=1):
    if value is None or value < minimum:
        raise ParameterError(f"--{name} debe ser >= {minimum}, se recibió {value}")
    return value


def _family(kind, shape):
    return {"W": AlgebraFamily.w, "Flag": AlgebraFamily.flag, "WL": AlgebraFamily.wl}[kind](*shape)


def _block_result(block):
    return {
        "description": block.description,
        "cohomology": _dims_json(block.cohomology()),
        "poincare": block.poincare(),
        "chain_dimensions": {str(p): d for p, d in block.chain_dimensions().items()},
    }


def wn_cohomology(params):
    """H(W_n; S^m W_n*) en peso cero hasta max_degree"""
    n = _positive("n", params["n"])
    p_max = _positive("max-degree", params["max_degree"], 0)
    block = build_absolute_complex(AlgebraFamily.w(n), _coeffs(params["sym"]), p_max, params["sector"])
    return _block_result(block)


def flag_cohomology(params):
    blocks = tuple(params["blocks"])
    p_max = _positive("max-degree", params["max_degree"], 0)
    block = build_absolute_complex(AlgebraFamily.flag(*blocks), _coeffs(params["sym"]), p_max)
    return _block_result(block)


def relative(params):
    family = _family(params["family"], tuple(params["shape"]))
    p_max = _positive("max-degree", params["max_degree"], 0)
    return _block_result(build_relative_complex(family, None, _coeffs(params["sym"]), p_max))


def wl_cohomology(params):
    """H(WL(m|n), gl_m⊕gl_n; k) junto con la predicción truncada"""
    m, n = _positive("m", params["m"]), _positive("n", params["n"])
    top = 2 * (m + n)
    p_max = params["max_degree"] if params["max_degree"] is not None else top + 1
    block = build_relative_complex(AlgebraFamily.wl(m, n), None, ModuleSpec.trivial(), p_max)
    result = _block_result(block)
    predicted = truncated_polynomial_poincare(n, top)
    expected = {d: v for d, v in dims_from_poly(predicted).items() if d <= p_max}
    result["predicted"] = predicted
    result["matches_prediction"] = support(block.cohomology()) == expected
    return result


def weyl_gl1(params):
    """Cohomología de W(1,...,1) con la base de monomios y la serie de Catalan"""
    N = _positive("N", params["N"])
    dims, predicted = gl1_flag_cohomology(N)
    formula = poincare_formula(N)
    return {
        "cohomology": _dims_json(dims),
        "basis": [str(mono) for mono in predicted],
        "poincare": formula,
        "matches_formula": poly_from_dims(dims) == formula,
    }


def transgression(params):
    """Complejo de transgresión; con direct también el complejo de W(bloques)"""
    blocks = tuple(params["blocks"])
    dims = transgression_cohomology(blocks)
    result = {
        "cohomology": _dims_json(dims),
        "relative_poincare": relative_flag_poincare(blocks),
    }
    if params["direct"]:
        top = TransgressionComplex(blocks).top
        direct = build_absolute_complex(AlgebraFamily.flag(*blocks), None, top).cohomology()
        if support(direct) != support(dims):
            raise VerificationError("BASIS_MISMATCH", f"W{blocks}: directo {support(direct)}, transgresión {support(dims)}")
        result["direct"] = _dims_json(direct)
    return result


def _coefficient_module(name, size):
    if name not in COEFFICIENTS:
        raise ParameterError(f"coeficientes desconocidos: {name}")
    return {"trivial": trivial_module, "tautological": tautological_module, "adjoint": adjoint_module}[name](size)


def parabolic_verify(params):
    m, n = _positive("m", params["m"]), _positive("n", params["n"])
    check = params["check"]
    if check == "vanishing":
        report = verify_b_vanishing(
            ParabolicSetup(m, n), tuple(params["partition"]), _coefficient_module(params["coefficients"], m + n)
        )
    elif check == "ext":
        report = verify_ext_prediction(tuple(params["highest"]), tuple(params["levi_weight"]), m, n)
    elif check == "degeneration":
        report = verify_grassmannian_degeneration(m, n, _coefficient_module(params["coefficients"], m + n))
    else:
        raise ParameterError(f"verificación desconocida: {check}")
    return report.to_dict()


def series(params):
    kind = params["kind"]
    if kind == "catalan":
        N = _positive("N", params["N"], 0)
        return {"catalan": [catalan(k) for k in range(N + 1)]}
    if kind == "grassmannian":
        return {"poincare": grassmannian_poincare(_positive("m", params["m"]), _positive("n", params["n"]))}
    if kind == "gl":
        return {"poincare": gl_cohomology_poincare(_positive("n", params["n"]))}
    if kind == "weyl-gl1":
        return {"poincare": poincare_formula(_positive("N", params["N"]))}
    if kind == "flag":
        return {"poincare": relative_flag_poincare(tuple(params["blocks"]))}
    if kind == "wl":
        m, n = _positive("m", params["m"]), _positive("n", params["n"])
        return {"poincare": truncated_polynomial_poincare(n, 2 * (m + n))}
    raise ParameterError(f"serie desconocida: {kind}")


def cocycle_verify(params):
    """a_{2m} y a_{3m}, ruedas c_{Γ_r} o la familia ξ_{λ,n}"""
    kind = params["kind"]
    if kind == "a":
        a2, a3 = a_cocycles(_positive("m", params["m"]))
        return {"a2": str(a2.expr), "a3": str(a3.expr), "closed": True, "exact": False}
    if kind == "wheel":
        r, n = _positive("r", params["r"]), _positive("n", params["n"])
        cochain = wheel_cocycle(r, n)
        block = relative_block(n, 0, 2 * r)
        closed = cochain.is_closed(block)
        invariant = not cochain.invariance_residual()
        if not closed or not invariant or (r > n and not cochain.is_zero()):
            raise VerificationError("COCYCLE_VIOLATED", f"c_Γ{r} en W_{n}: cerrada={closed}, invariante={invariant}")
        return {"zero": cochain.is_zero(), "closed": closed, "invariant": invariant, "support": len(cochain.values)}
    if kind == "xi":
        n, m = _positive("n", params["n"]), _positive("m", params["m"], 0)
        family = partitions_bounded(m + n, n)
        cochains = [xi_lambda(lam, n, m) for lam in family]
        block = relative_block(n, m, 2 * n)
        closed = [c.is_closed(block) for c in cochains]
        rank = class_rank(block, 2 * n, cochains)
        if not all(closed) or rank != len(family):
            raise VerificationError("COCYCLE_VIOLATED", f"ξ para n={n}, m={m}: cerradas={closed}, rango={rank}")
        return {
            "partitions": [list(lam.parts) for lam in family],
            "closed": closed,
            "rank": rank,
            "cohomology": _dims_json(block.cohomology()),
        }
    raise ParameterError(f"tipo de cociclo desconocido: {kind}")


def obstruction_bound(n):
    """
    Grado máximo n² + 2n y cota n² + 2 de las clases de subfoliaciones

    La cota se comprueba enumerando max_{0<d<n} (n-d)² + d² + 2n.

    Returns:
        tuple: (n² + 2n, n² + 2)
    """
    if n < 2:
        raise ParameterError(f"obstruction_bound necesita n >= 2, se recibió {n}")
    values = {d: (n - d) ** 2 + d ** 2 + 2 * n for d in range(1, n)}
    bound = n * n + 2
    if max(values.values()) != bound:
        raise VerificationError("OBSTRUCTION_BOUND_VIOLATED", f"n={n}: máximo {max(values.values())} != {bound}")
    return n * n + 2 * n, bound


def obstruction(params):
    n = params["n"]
    top, bound = obstruction_bound(n)
    values = {d: (n - d) ** 2 + d ** 2 + 2 * n for d in range(1, n)}
    return {"top_degree": top, "subflag_bound": bound, "argmax": [d for d, v in values.items() if v == bound]}


def _acceptance_checks(level):
    """
    Lista de (nombre, función) de las comprobaciones de aceptación

    quick cubre todos los criterios con sus tamaños mínimos; full amplía los
    barridos de parámetros.
    """
    full = level == "full"
    w1 = AlgebraFamily.w(1)
    checks = []

    for m in range(1, 7 if full else 5):
        checks.append((
            f"H(W_1; S^{m}) = {{2: 1, 3: 1}}",
            lambda m=m: support(build_absolute_complex(w1, ModuleSpec.sym(m), 5).cohomology()) == {2: 1, 3: 1},
        ))
        checks.append((
            f"H(W_1, gl_1; S^{m}) = {{2: 1}}",
            lambda m=m: support(build_relative_complex(w1, None, ModuleSpec.sym(m), 4).cohomology()) == {2: 1},
        ))
    checks.append((
        "H(W_2, gl_2; S^1) = {4: 2}",
        lambda: support(build_relative_complex(AlgebraFamily.w(2), None, ModuleSpec.sym(1), 6).cohomology())
        == {4: len(partitions_bounded(3, 2))},
    ))

    def flag_11():
        dims = support(build_absolute_complex(AlgebraFamily.flag(1, 1), None, 6).cohomology())
        return dims == {0: 1, 3: 1, 5: 2, 6: 2} == support(gl1_flag_cohomology(2)[0]) == dims_from_poly(poincare_formula(2))

    checks.append(("H(W(1,1)) = {0: 1, 3: 1, 5: 2, 6: 2}", flag_11))

    for blocks in ((1,), (1, 1), (2,)):
        def dual_path(blocks=blocks):
            top = TransgressionComplex(blocks).top
            direct = build_absolute_complex(AlgebraFamily.flag(*blocks), None, top).cohomology()
            return support(direct) == support(transgression_cohomology(blocks))

        checks.append((f"transgresión = directo para {blocks}", dual_path))

    for N in range(1, 7 if full else 6):
        checks.append((
            f"W(1^{N}) frente a la serie de Catalan",
            lambda N=N: poly_from_dims(gl1_flag_cohomology(N)[0]) == poincare_formula(N),
        ))

    def wl_11():
        block = build_relative_complex(AlgebraFamily.wl(1, 1), None, None, 5)
        expected = dims_from_poly(truncated_polynomial_poincare(1, 4))
        return (
            support(block.cohomology()) == {0: 1, 2: 1, 4: 1} == expected
            and block.chain_dimensions() == truncated_weyl_chain_dims(1, 1, 5)
        )

    checks.append(("H(WL(1|1), gl_1+gl_1) = {0: 1, 2: 1, 4: 1}", wl_11))

    for m, n in ((1, 1), (1, 2), (2, 2)) + (((1, 3),) if full else ()):
        checks.append((
            f"H(gl_{m + n}, gl_{m}+gl_{n}) = grassmanniana",
            lambda m=m, n=n: poly_from_dims(finite_pair_relative_cohomology(gl(m + n), levi(m, n)))
            == grassmannian_poincare(m, n),
        ))

    for m, n in ((1, 1), (1, 2)):
        partitions = ((), (1,), (2,)) + (((1, 1),) if full and n >= 2 else ())
        for partition in partitions:
            for name in COEFFICIENTS:
                checks.append((
                    f"anulación en b({m},{n}) con λ={partition}, L={name}",
                    lambda m=m, n=n, partition=partition, name=name: verify_b_vanishing(
                        ParabolicSetup(m, n), partition, _coefficient_module(name, m + n)
                    ).passed,
                ))
        for name in ("trivial", "adjoint") + (("tautological",) if full else ()):
            checks.append((
                f"degeneración de Hochschild–Serre ({m},{n}), L={name}",
                lambda m=m, n=n, name=name: verify_grassmannian_degeneration(
                    m, n, _coefficient_module(name, m + n)
                ).passed,
            ))

    checks.append((
        "a_{2m}, a_{3m} cociclos no triviales",
        lambda: all(a_cocycles(m) for m in range(1, 9 if full else 7)),
    ))
    for r, n in ((1, 1), (1, 2), (2, 1), (2, 2)) + (((3, 1),) if full else ()):
        checks.append((
            f"rueda Γ_{r} en W_{n}",
            lambda r=r, n=n: bool(cocycle_verify({"kind": "wheel", "r": r, "n": n})),
        ))
    checks.append((
        "ξ_{λ,2} con m=1 generan H^4",
        lambda: cocycle_verify({"kind": "xi", "n": 2, "m": 1})["rank"] == 2,
    ))

    checks.append(("d∘d = 0 en los complejos construidos", _d_squared_everywhere))
    checks.append(("característica de Euler constante en las páginas", _euler_is_constant_across_pages))
    checks.append((
        f"identidad de obstrucción n <= {30 if full else 10}",
        lambda: all(obstruction_bound(n) for n in range(2, 31 if full else 11)),
    ))
    bound = 4 if full else 3
    checks.append((
        f"Howe exterior a, b <= {bound}",
        lambda: all(
            howe_exterior_check(k, a, b)
            for a in range(1, bound + 1) for b in range(1, bound + 1) for k in range(a * b + 1)
        ),
    ))
    sizes = (3, 4, 5) if full else (3, 4)
    checks.append((
        f"acción punto en S_{sizes}",
        lambda: all(_dot_action_is_group_action(size) for size in sizes),
    ))
    families = [AlgebraFamily.w(2), AlgebraFamily.flag(1, 2), AlgebraFamily.flag(1, 1, 1), AlgebraFamily.wl(1, 1)]
    for family in families:
        checks.append((
            f"Jacobi en {family} sobre ternas de peso -1..{4 if full else 2}",
            lambda family=family: _jacobi_on_samples(family, 4 if full else 2),
        ))
    return checks


def _d_squared_everywhere():
    blocks = [
        build_absolute_complex(AlgebraFamily.w(1), ModuleSpec.sym(2), 4),
        build_absolute_complex(AlgebraFamily.flag(1, 1), None, 4),
        build_relative_complex(AlgebraFamily.wl(1, 1), None, None, 4),
        finite_relative_complex(gl(3), levi(1, 2), tautological_module(3))[0],
    ]
    return all(block.check_d_squared() for block in blocks)


def _euler_is_constant_across_pages():
    filtered = filtered_relative_complex(gl(3), levi(1, 2), parabolic_algebra(1, 2))
    block = filtered.block
    euler = sum((-1) ** p * block.dimension(p) for p in range(block.top + 1))
    return {page.euler_characteristic() for page in hochschild_serre_pages(filtered, 3)} == {euler}


def _jacobi_on_samples(family, w_max, samples=300):
    """Jacobi sobre ternas aleatorias (semilla fija) de campos de la familia"""
    elements = [f for w in range(-1, w_max + 1) for f in basis_at_weight(family, w)]
    generator = random.Random(len(elements))
    for _ in range(samples):
        if not jacobi_check(generator.sample(elements, 3)):
            return False
    return True


def _dot_action_is_group_action(size):
    weight = tuple(range(size, 0, -1))
    group = [Permutation(images) for images in permutations(range(1, size + 1))]
    for first in group:
        for second in group:
            if dot_action(first.compose(second), weight) != dot_action(first, dot_action(second, weight)):
                return False
    return True


def verify_all(params):
    """
    Ejecuta la batería de aceptación

    Returns:
        dict: {"checks": {nombre: "ok" o mensaje}, "passed": int, "failed": int}
    """
    level = params["level"]
    if level not in ("quick", "full"):
        raise ParameterError(f"nivel desconocido: {level}")
    print("=" * 60, file=sys.stderr)
    print(f"INICIANDO VERIFICACIÓN ({level})", file=sys.stderr)
    print("=" * 60, file=sys.stderr)

    results = {}
    for name, check in _acceptance_checks(level):
        print(f"[INFO] {name}...", file=sys.stderr)
        try:
            passed = bool(check())
            results[name] = "ok" if passed else "falló"
        except AlgebraError as e:
            results[name] = f"{e.code}: {e.message}"
        tag = "[OK]" if results[name] == "ok" else "[ERROR]"
        print(f"{tag} {name}: {results[name]}", file=sys.stderr)

    failed = sum(1 for value in results.values() if value != "ok")
    print("=" * 60, file=sys.stderr)
    print("[OK] VERIFICACIÓN COMPLETADA" if not failed else f"[ERROR] {failed} COMPROBACIONES FALLARON", file=sys.stderr)
    print("=" * 60, file=sys.stderr)
    return {"checks": results, "passed": len(results) - failed, "failed": failed}


COMMANDS = {
    "wn-cohomology": wn_cohomology,
    "flag-cohomology": flag_cohomology,
    "relative": relative,
    "wl-cohomology": wl_cohomology,
    "weyl-gl1": weyl_gl1,
    "transgression": transgression,
    "parabolic-verify": parabolic_verify,
    "series": series,
    "cocycle-verify": cocycle_verify,
    "verify-all": verify_all,
    "obstruction": obstruction,
}
