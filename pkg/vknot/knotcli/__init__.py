"""
Catalogs, table notations and the ``vknot`` command line interface.
"""

from ._appendix import AppendixStyle, format_appendix, parse_appendix
from ._catalog import (
    KnotRecord,
    Catalog,
    DistinguishReport,
    load_catalog,
    load_fixture_catalog,
    compute_table,
    write_table,
    distinguish,
)
from ._cli import main

__all__ = [
    "AppendixStyle",
    "format_appendix",
    "parse_appendix",
    "KnotRecord",
    "Catalog",
    "DistinguishReport",
    "load_catalog",
    "load_fixture_catalog",
    "compute_table",
    "write_table",
    "distinguish",
    "main",
]
