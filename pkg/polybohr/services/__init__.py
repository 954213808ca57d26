"""
Numerical Services
"""

from polybohr.services.word_service import (
    reverse,
    right_divides,
    left_divides,
    multiword_right_leq,
    multiword_left_leq,
    is_right_minimal,
    is_left_minimal,
    is_orthogonal,
    words_of_length,
    words_up_to,
    multiword_identity,
    enumerate_lambda,
    enumerate_gamma,
    compositions,
)

from polybohr.services.fock_service import (
    basis,
    basis_index,
    word_operator,
    left_creation,
    right_creation,
    truncation_for,
    assemble,
    assemble_pluriharmonic,
    extract_pluriharmonic,
    is_multi_toeplitz,
    gram_pluriharmonic,
    berezin_kernel,
    berezin_transform,
    evaluate_scalar,
)

from polybohr.services.spectral_service import (
    operator_norm,
    min_eig_hermitian,
    max_eig_hermitian,
    is_positive,
    numerical_radius,
    joint_numerical_radius,
    norm_profile,
)

from polybohr.services.radius_service import (
    majorant_mh,
    majorant_h,
    majorant_curve,
    bound_C,
    bound_K,
    bound_K0,
    bound_M,
    bound_Omega,
    bound_d_upper,
    solve_gamma_k,
    solve_t_k0,
    solve_t_m,
    closed_bounds,
)

from polybohr.services.sampling_service import (
    gen_schur,
    gen_re_bounded,
    mobius_polynomial,
    positive_trig_coefficients,
)

from polybohr.services.verification_service import (
    SUITES,
    run_suites,
    wiener_suite,
    bohr_mh_suite,
    bohr_h_suite,
    bohr_zero_suite,
    landau_op_suite,
    fejer_suite,
    bohr_numrad_suite,
    landau_polydisc_suite,
    harnack_suite,
    re_bridge_suite,
    bombieri_upper_suite,
)

__all__ = [
    # Word service
    "reverse",
    "right_divides",
    "left_divides",
    "multiword_right_leq",
    "multiword_left_leq",
    "is_right_minimal",
    "is_left_minimal",
    "is_orthogonal",
    "words_of_length",
    "words_up_to",
    "multiword_identity",
    "enumerate_lambda",
    "enumerate_gamma",
    "compositions",
    # Fock service
    "basis",
    "basis_index",
    "word_operator",
    "left_creation",
    "right_creation",
    "truncation_for",
    "assemble",
    "assemble_pluriharmonic",
    "extract_pluriharmonic",
    "is_multi_toeplitz",
    "gram_pluriharmonic",
    "berezin_kernel",
    "berezin_transform",
    "evaluate_scalar",
    # Spectral service
    "operator_norm",
    "min_eig_hermitian",
    "max_eig_hermitian",
    "is_positive",
    "numerical_radius",
    "joint_numerical_radius",
    "norm_profile",
    # Radius service
    "majorant_mh",
    "majorant_h",
    "majorant_curve",
    "bound_C",
    "bound_K",
    "bound_K0",
    "bound_M",
    "bound_Omega",
    "bound_d_upper",
    "solve_gamma_k",
    "solve_t_k0",
    "solve_t_m",
    "closed_bounds",
    # Sampling service
    "gen_schur",
    "gen_re_bounded",
    "mobius_polynomial",
    "positive_trig_coefficients",
    # Verification service
    "SUITES",
    "run_suites",
    "wiener_suite",
    "bohr_mh_suite",
    "bohr_h_suite",
    "bohr_zero_suite",
    "landau_op_suite",
    "fejer_suite",
    "bohr_numrad_suite",
    "landau_polydisc_suite",
    "harnack_suite",
    "re_bridge_suite",
    "bombieri_upper_suite",
]
