"""JSON file formats for ensembles and bipartite scenarios.

Complex numbers are ``[re, im]`` pairs; matrices are row-major lists of rows.

Ensemble file::

    {"dim": 2, "label": "mixture 1",
     "states": [{"amplitudes": [[0.7071, 0], [0.7071, 0]], "prob": 0.5},
                {"amplitudes": [[0.7071, 0], [-0.7071, 0]], "prob": 0.5}]}

Scenario file keys: ``H1``, ``H2``, ``Hint`` (matrices), ``psi1``, ``psi2``
(amplitude lists), ``t0``, ``t1``, ``sample_times``, optional ``H1_after``
and ``label``.
"""

from __future__ import annotations

import io
import json
import os

import numpy as np

from . import errors
from .bipartite import ScenarioSpec
from .mixtures import Ensemble, make_ensemble
from .qalgebra import Observable, make_ket


class FileFormatError(errors.ZehmixError):
    """Malformed JSON or a missing/ill-typed field."""


def _read(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return os.fspath(source), fh.read()
    data = source.read()
    if isinstance(data, str):
        data = data.encode("utf-8")
    return getattr(source, "name", "<stream>"), data


def _load_json(name, raw):
    try:
        return json.loads(raw.decode("utf-8"))
    except json.JSONDecodeError as exc:
        raise FileFormatError(f"{name}:{exc.lineno}:{exc.colno}: syntax error: {exc.msg}") from None
    except UnicodeDecodeError as exc:
        raise FileFormatError(f"{name}: not UTF-8 text ({exc.reason})") from None


def _field(obj, key, where, name):
    if not isinstance(obj, dict) or key not in obj:
        raise FileFormatError(f"{name}: {where}: missing field {key!r}")
    return obj[key]


def _number(value, where, name):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise FileFormatError(f"{name}: {where}: expected a number, got {value!r}")
    return float(value)


def decode_complex(value, where, name):
    if not (isinstance(value, list) and len(value) == 2):
        raise FileFormatError(f"{name}: {where}: expected an [re, im] pair, got {value!r}")
    re, im = (_number(v, where, name) for v in value)
    return complex(re, im)


def decode_vector(value, where, name):
    if not isinstance(value, list):
        raise FileFormatError(f"{name}: {where}: expected a list of [re, im] pairs")
    return np.array([decode_complex(v, f"{where}[{i}]", name) for i, v in enumerate(value)])


def decode_matrix(value, where, name):
    if not isinstance(value, list) or not value:
        raise FileFormatError(f"{name}: {where}: expected a non-empty list of rows")
    rows = [decode_vector(r, f"{where}[{i}]", name) for i, r in enumerate(value)]
    if any(r.size != len(rows) for r in rows):
        raise errors.DimensionMismatch(f"{name}: {where}: matrix is not square")
    return np.array(rows)


def encode_complex(z) -> list:
    return [float(np.real(z)), float(np.imag(z))]


def encode_matrix(m) -> list:
    return [[encode_complex(z) for z in row] for row in np.asarray(m)]


def _rethrow(exc, name, where):
    cls = type(exc)
    message = f"{name}: {where}: {cls.__name__}: {exc}"
    if isinstance(exc, errors.NegativeProbability):
        return cls(message, index=exc.index)
    return cls(message)


def parse_ensemble_file(source) -> Ensemble:
    """Read an ensemble from a path or a readable stream.

    Syntax errors carry ``file:line:col``; semantic errors keep their
    ``zehmix.errors`` class and name the offending ``states[i]`` field.
    """
    name, raw = _read(source)
    doc = _load_json(name, raw)
    dim = _field(doc, "dim", "top level", name)
    if isinstance(dim, bool) or not isinstance(dim, int) or dim < 1:
        raise FileFormatError(f"{name}: dim: expected a positive integer, got {dim!r}")
    states = _field(doc, "states", "top level", name)
    if not isinstance(states, list) or not states:
        raise errors.EmptyEnsemble(f"{name}: states: expected a non-empty list")

    pairs = []
    for i, entry in enumerate(states):
        where = f"states[{i}]"
        amps = decode_vector(_field(entry, "amplitudes", where, name), f"{where}.amplitudes", name)
        if amps.size != dim:
            raise errors.DimensionMismatch(
                f"{name}: {where}.amplitudes: length {amps.size} does not match dim {dim}")
        prob = _number(_field(entry, "prob", where, name), f"{where}.prob", name)
        if prob < 0:
            raise errors.NegativeProbability(
                f"{name}: {where}.prob: probability {prob!r} is negative", index=i)
        try:
            ket = make_ket(amps)
        except errors.ZehmixError as exc:
            raise _rethrow(exc, name, f"{where}.amplitudes") from None
        pairs.append((ket, prob))

    label = doc.get("label", "")
    try:
        return make_ensemble(pairs, label=str(label))
    except errors.ZehmixError as exc:
        raise _rethrow(exc, name, "states") from None


def ensemble_to_dict(e: Ensemble) -> dict:
    out = {"dim": e.dim}
    if e.label:
        out["label"] = e.label
    out["states"] = [{"amplitudes": [encode_complex(a) for a in k.amplitudes], "prob": p}
                     for k, p in e]
    return out


def write_ensemble_file(e: Ensemble, path):
    with open(path, "w") as fh:
        json.dump(ensemble_to_dict(e), fh, indent=2)
        fh.write("\n")


def parse_scenario_file(source) -> ScenarioSpec:
    name, raw = _read(source)
    doc = _load_json(name, raw)

    def observable(key, optional=False):
        if optional and key not in doc:
            return None
        mat = decode_matrix(_field(doc, key, "top level", name), key, name)
        try:
            return Observable(mat, label=key)
        except errors.ZehmixError as exc:
            raise _rethrow(exc, name, key) from None

    def ket(key):
        try:
            return make_ket(decode_vector(_field(doc, key, "top level", name), key, name))
        except errors.ZehmixError as exc:
            if isinstance(exc, FileFormatError):
                raise
            raise _rethrow(exc, name, key) from None

    times = _field(doc, "sample_times", "top level", name)
    if not isinstance(times, list):
        raise FileFormatError(f"{name}: sample_times: expected a list of numbers")
    try:
        return ScenarioSpec(
            H1=observable("H1"),
            H2=observable("H2"),
            Hint=observable("Hint"),
            psi1=ket("psi1"),
            psi2=ket("psi2"),
            t0=_number(_field(doc, "t0", "top level", name), "t0", name),
            t1=_number(_field(doc, "t1", "top level", name), "t1", name),
            sample_times=tuple(_number(t, f"sample_times[{i}]", name) for i, t in enumerate(times)),
            H1_after=observable("H1_after", optional=True),
        )
    except errors.ZehmixError as exc:
        if isinstance(exc, FileFormatError) or str(exc).startswith(name):
            raise
        raise _rethrow(exc, name, "scenario") from None


def scenario_to_dict(spec: ScenarioSpec) -> dict:
    out = {
        "H1": encode_matrix(spec.H1.matrix),
        "H2": encode_matrix(spec.H2.matrix),
        "Hint": encode_matrix(spec.Hint.matrix),
        "psi1": [encode_complex(a) for a in spec.psi1.amplitudes],
        "psi2": [encode_complex(a) for a in spec.psi2.amplitudes],
        "t0": spec.t0,
        "t1": spec.t1,
        "sample_times": list(spec.sample_times),
    }
    if spec.H1_after is not None:
        out["H1_after"] = encode_matrix(spec.H1_after.matrix)
    return out


def dumps_stream(obj) -> io.StringIO:
    """JSON text of ``obj`` as a readable stream (handy for tests and demos)."""
    return io.StringIO(json.dumps(obj))
