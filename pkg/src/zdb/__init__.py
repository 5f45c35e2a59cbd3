"""Zero-difference balanced functions: constructions, verification, applications."""

from .algebra import (
    FieldSpec,
    build_field,
    element_order,
    factor_prime_power,
    field_add,
    field_inv,
    field_mul,
    field_sub,
    inverse_mod,
    pow_mod_order,
)
from .applications import (
    CccCode,
    Dss,
    build_ccc,
    build_dss,
    ccc_bound,
    dss_bound,
    verify_ccc,
    verify_dss,
)
from .core import NotZdb, ZdbFunction, ZdbParams, from_labels, relabel, verify_pdf, verify_zdb
from .cyclotomic import (
    build_coset_table,
    build_paired_table,
    construct_coset_zdb,
    construct_pair_coset_zdb,
)
from .group import GroupSpec, enumerate_support_class, group_add, group_neg, support_of
from .product import coset_decompose, construct_product

__version__ = "0.1.0"
