"""Series -> plan -> circuit."""
from .builders import (assemble, build_chain, build_un, build_upre, encode_input,
                       un_gates, upre_gates)
from .io import dump_json, load_plan, load_series
from .plan import (CompiledPlan, SlotTerm, back_substitute, compile_plan, cospower_laurent,
                   max_c, plan_terms, signed_phase)
from .series import FourierSeries, fourier_from_samples, square_wave_series
from .slots import (SlotSpec, angles_for_beta, angles_from_beta, link_factor, link_phase,
                    theta_from_w, w_from_theta, wrap_angle)

__all__ = [
    "FourierSeries", "SlotSpec", "CompiledPlan", "SlotTerm", "compile_plan", "max_c",
    "back_substitute", "cospower_laurent", "signed_phase", "plan_terms",
    "angles_for_beta", "angles_from_beta", "link_phase", "link_factor", "wrap_angle",
    "w_from_theta", "theta_from_w", "build_upre", "upre_gates", "build_un", "un_gates",
    "build_chain", "encode_input", "assemble", "fourier_from_samples",
    "square_wave_series", "load_series", "load_plan", "dump_json",
]
