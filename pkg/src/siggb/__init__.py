"""Incremental signature-based Groebner basis computation over prime fields.

The package has three layers:

* ``ring`` / ``classic``: polynomial arithmetic in degrevlex order, normal
  forms, interreduction, and a classical Buchberger computation used as the
  verification oracle.
* ``signatures`` / ``criteria`` / ``engine``: the labeled-polynomial engine
  with the non-minimal (NM) and rewritable (RW) signature criteria and six
  selectable variants (ggv, ggv-i, f5c, f5c-i, f5a, f5a-i).
* ``systems`` / ``bench`` / ``cli``: benchmark generators, the input-file
  format, and the reporting harness behind the ``siggb`` command.
"""

from .classic import (
    PolyBasis,
    buchberger,
    check_reduced,
    interreduce,
    is_groebner,
    normal_form,
    spoly,
)
from .criteria import (
    RuleList,
    SyzygySigSet,
    build_S_from_interreduction,
    corollary_filter,
    nm_check,
    psyz_signatures,
    rw_check_f5,
    rw_check_ggv,
)
from .engine import (
    VARIANTS,
    EngineState,
    PairLimitExceeded,
    Stats,
    VariantConfig,
    inc_sig,
    sig_gb,
    stat_report,
)
from .ring import (
    ExactDivisionError,
    Polynomial,
    PolyRing,
    PrimeField,
    RingMismatchError,
    cmp_degrevlex,
    degrevlex_key,
    mono_degree,
    mono_div,
    mono_divides,
    mono_lcm,
    mono_mul,
    poly_add,
    poly_make_monic,
    poly_mul_term,
)
from .signatures import (
    EQUAL_SIGNATURE,
    TRIVIAL,
    CriticalPair,
    LabeledPoly,
    Signature,
    make_spair,
    sig_cmp,
    sig_key,
    sig_mul,
    sig_safe_reduce,
    spair_poly,
)
from .systems import (
    DEFAULT_CHAR,
    ParseError,
    SystemSpec,
    format_system,
    gen_cyclic,
    gen_eco,
    gen_katsura,
    gen_random,
    homogenize,
    parse_system,
)
from .bench import BenchReport, report_csv, report_json, report_text, run_bench

__version__ = "0.1.0"

__all__ = [
    "BenchReport", "CriticalPair", "DEFAULT_CHAR", "EQUAL_SIGNATURE",
    "EngineState", "ExactDivisionError", "LabeledPoly", "PairLimitExceeded",
    "ParseError", "PolyBasis", "PolyRing", "Polynomial", "PrimeField",
    "RingMismatchError", "RuleList", "Signature", "Stats", "SystemSpec",
    "SyzygySigSet", "TRIVIAL", "VARIANTS", "VariantConfig",
    "buchberger", "build_S_from_interreduction", "check_reduced",
    "cmp_degrevlex", "corollary_filter", "degrevlex_key", "format_system",
    "gen_cyclic", "gen_eco", "gen_katsura", "gen_random", "homogenize",
    "inc_sig", "interreduce", "is_groebner", "make_spair", "mono_degree",
    "mono_div", "mono_divides", "mono_lcm", "mono_mul", "nm_check",
    "normal_form", "parse_system", "poly_add", "poly_make_monic",
    "poly_mul_term", "psyz_signatures", "report_csv", "report_json",
    "report_text", "run_bench", "rw_check_f5", "rw_check_ggv", "sig_cmp",
    "sig_gb", "sig_key", "sig_mul", "sig_safe_reduce", "spair_poly", "spoly",
    "stat_report",
]
