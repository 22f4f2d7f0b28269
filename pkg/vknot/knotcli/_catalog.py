"""
Knot catalogs: loading, batch computation and table output.
"""

import json
import logging
from dataclasses import dataclass, field
from functools import cached_property
from pathlib import Path
from typing import Dict, Iterable, List, TextIO, Union

import pandas as pd

from ..diagram import GaussDiagram, parse, serialize
from ..exceptions import CatalogError, GaussCodeError, VirtualKnotError
from ..invariants import InvariantSet, all_invariants
from ..laurent import LaurentPoly
from ..utils import parallel_loop
from ._appendix import format_appendix

logger = logging.getLogger(__name__)

FIXTURES = Path(__file__).parent / "data" / "fixtures.tsv"

TABLE_FORMATS = ("json", "csv", "appendix")
COMPARED = ("W", "I", "II", "III")


@dataclass(frozen=True)
class KnotRecord:
    """A named diagram. Its invariants are computed on first access."""

    name: str
    code: GaussDiagram

    @cached_property
    def invariants(self) -> InvariantSet:
        return all_invariants(self.code)


@dataclass
class Catalog:
    """
    Ordered collection of knot records with unique names.

    Iteration follows file order.
    """

    records: List[KnotRecord] = field(default_factory=list)

    def __post_init__(self):
        names = [record.name for record in self.records]
        if len(set(names)) != len(names):
            duplicated = sorted({n for n in names if names.count(n) > 1})
            msg = f"Duplicate knot names: {', '.join(duplicated)}."
            raise CatalogError(msg)

    def __iter__(self):
        return iter(self.records)

    def __len__(self):
        return len(self.records)

    def __getitem__(self, key: Union[int, str]) -> KnotRecord:
        if isinstance(key, str):
            for record in self.records:
                if record.name == key:
                    return record
            raise KeyError(key)
        return self.records[key]

    @property
    def names(self) -> List[str]:
        return [record.name for record in self.records]

    def to_frame(self) -> pd.DataFrame:
        """One row per record with the name, canonical code and chord count."""
        return pd.DataFrame(
            {
                "name": self.names,
                "gauss_code": [serialize(r.code) for r in self.records],
                "n": [r.code.n for r in self.records],
            }
        )


def _read_lines(lines: Iterable[str]) -> Catalog:
    records = []
    seen: Dict[str, int] = {}
    for lineno, line in enumerate(lines, start=1):
        line = line.rstrip("\r\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        if "\t" not in line:
            raise CatalogError("Expected 'name<TAB>gauss_code'.", lineno)

        name, code = line.split("\t", 1)
        name = name.strip()
        if not name:
            raise CatalogError("Missing knot name.", lineno)
        if name in seen:
            msg = f"Knot {name!r} already defined on line {seen[name]}."
            raise CatalogError(msg, lineno)
        try:
            diagram = parse(code)
        except GaussCodeError as error:
            raise CatalogError(str(error), lineno) from error
        seen[name] = lineno
        records.append(KnotRecord(name, diagram))
    return Catalog(records)


def load_catalog(path) -> Catalog:
    """
    Read a catalog file.

    Parameters
    ----------
    path : str or path-like
        UTF-8 file of ``name<TAB>gauss_code`` lines. Blank lines and lines
        starting with ``#`` are skipped.

    Returns
    -------
    Catalog

    Raises
    ------
    CatalogError
        On a malformed line, an invalid Gauss code or a repeated name. The
        message carries the line number.
    """
    with open(path, encoding="utf-8") as f:
        return _read_lines(f)


def load_fixture_catalog() -> Catalog:
    """Catalog bundled with the package: classical knots and a few virtual ones."""
    return load_catalog(FIXTURES)


def _record(knot: KnotRecord) -> dict:
    code = serialize(knot.code)
    try:
        return knot.invariants.to_record(knot.name, code)
    except VirtualKnotError as error:
        logger.warning("could not compute invariants of %s: %s", knot.name, error)
        return {"name": knot.name, "gauss_code": code, "error": str(error)}


def compute_table(catalog: Catalog, n_jobs=None, progress_bar=False) -> List[dict]:
    """
    Invariant records of every knot of a catalog, in catalog order.

    A record whose computation fails carries an ``error`` entry instead of
    the invariants; the other records are still computed.

    Parameters
    ----------
    catalog : Catalog
        Knots to process.

    n_jobs : int, default=None
        Number of workers; see :func:`vknot.utils.parallel_loop`.

    progress_bar : bool, default=False
        Show a tqdm progress bar.

    Returns
    -------
    list of dict
        Records as produced by :meth:`InvariantSet.to_record`.
    """
    return parallel_loop(
        _record,
        list(catalog),
        n_jobs=n_jobs,
        progress_bar=progress_bar,
        description="invariants",
    )


def _appendix_row(record: dict) -> str:
    if "error" in record:
        return f"{record['name']}\terror: {record['error']}"
    P = LaurentPoly.from_string
    cells = [
        record["name"],
        format_appendix(P(record["W"]), "braced"),
        format_appendix(P(record["Wbar"]), "symmetric"),
        format_appendix(P(record["I"]), "braced"),
        format_appendix(P(record["II"]), "symmetric"),
        format_appendix(P(record["III_representative"]), "symmetric"),
    ]
    return "\t".join(cells)


def write_table(records: List[dict], fmt: str, stream: TextIO):
    """
    Render invariant records.

    Parameters
    ----------
    records : list of dict
        Output of :func:`compute_table`.

    fmt : {"json", "csv", "appendix"}
        ``json`` writes one object per line, ``csv`` a header and one row per
        record, ``appendix`` the tab separated columns name, W, Wbar, I, II
        and III in the table notations.

    stream : file-like
        Destination.
    """
    if fmt not in TABLE_FORMATS:
        msg = f"Unknown table format {fmt!r}; use one of {', '.join(TABLE_FORMATS)}."
        raise ValueError(msg)

    if fmt == "json":
        for record in records:
            stream.write(json.dumps(record) + "\n")
    elif fmt == "csv":
        pd.DataFrame(records).to_csv(stream, index=False)
    else:
        stream.write("name\tW\tWbar\tI\tII\tIII\n")
        for record in records:
            stream.write(_appendix_row(record) + "\n")


@dataclass(frozen=True)
class DistinguishReport:
    """Which of W, I, II and III differ between two knots."""

    differs: Dict[str, bool]

    @property
    def distinguished(self) -> bool:
        return any(self.differs.values())

    def __str__(self):
        different = [k for k in COMPARED if self.differs[k]]
        equal = [k for k in COMPARED if not self.differs[k]]
        parts = []
        if different:
            verb = "differs" if len(different) == 1 else "differ"
            parts.append(f"{', '.join(different)} {verb}")
        if equal:
            verb = "equals" if len(equal) == 1 else "equal"
            parts.append(f"{', '.join(equal)} {verb}")
        return "; ".join(parts)


def distinguish(s1, s2) -> DistinguishReport:
    """
    Compare the invariants of two knots.

    ``III`` classes over moduli that differ by more than a sign count as
    different. The report is symmetric in its arguments.

    Parameters
    ----------
    s1, s2 : InvariantSet
        Invariants to compare. Anything with ``W``, ``I``, ``II`` and ``III``
        attributes works.

    Returns
    -------
    DistinguishReport

    Examples
    --------
    >>> from vknot.invariants import all_invariants
    >>> from vknot.knotcli import distinguish
    >>> trefoil = all_invariants("O1+U2+O3+U1+O2+U3+")
    >>> str(distinguish(trefoil, all_invariants("")))
    'W, I, II, III equal'
    """
    return DistinguishReport({k: getattr(s1, k) != getattr(s2, k) for k in COMPARED})
