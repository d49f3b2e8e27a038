"""
Adjoint representations, the bounds-Ad and Type R probes, and the explicit
weights on SL(2, R) and ax+b.
"""
from adjoint.matrices import AdjointRep, ad_matrix, ad_numeric, adjoint_rep, lie_basis
from adjoint.probes import bounds_ad_probe, type_r_probe, unipotent_norm_bound
from adjoint.weights import AxbCertificate, axb_decompose, sl2_scales
from groups.sampling import SamplerSpec

__all__ = [
    "AdjointRep",
    "AxbCertificate",
    "SamplerSpec",
    "ad_matrix",
    "ad_numeric",
    "adjoint_rep",
    "axb_decompose",
    "bounds_ad_probe",
    "lie_basis",
    "sl2_scales",
    "type_r_probe",
    "unipotent_norm_bound",
]
