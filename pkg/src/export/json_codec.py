"""
JSON serialization of netlists

Layout:
    {
      "meta": {"family", "p", "n", "cor", "modulus", "report"},
      "inputs": [{"wire", "class"}],
      "gates": [{"id", "kind", "in": [{"wire", "inv", "class"}], "out": [...]}],
      "outputs": {name: {"kind": "plain" | "d1", ...}},
      "wire_count": int
    }
Gates are listed in topological order.
"""

import json
import logging
from typing import Any, Dict

from src.common.models import BuildReport, D1Output, Gate, GateKind, Modulus, Netlist, PlainResidue, Signal

logger = logging.getLogger(__name__)


def _signal(s: Signal) -> Dict[str, Any]:
    return {"wire": s.wire, "inv": s.inverted, "class": s.weight_class}


def _read_signal(data: Dict[str, Any]) -> Signal:
    return Signal(wire=data["wire"], inverted=data.get("inv", False), weight_class=data.get("class", 0))


def _modulus(m: Modulus) -> Dict[str, Any]:
    return {"n": m.n, "kind": m.kind.value, "value": m.value()}


def _read_modulus(data: Dict[str, Any]) -> Modulus:
    return Modulus(n=data["n"], kind=data["kind"])


def netlist_to_dict(nl: Netlist) -> Dict[str, Any]:
    outputs: Dict[str, Any] = {}
    for port in nl.outputs:
        if isinstance(port, D1Output):
            outputs[port.name] = {
                "kind": "d1",
                "modulus": _modulus(port.modulus),
                "zero": _signal(port.zero),
                "magnitude": [_signal(s) for s in port.magnitude],
            }
        else:
            outputs[port.name] = {
                "kind": "plain",
                "modulus": _modulus(port.modulus),
                "signals": [_signal(s) for s in port.signals],
                "correction": port.correction,
                "canonical": port.canonical,
            }
    report = nl.report
    return {
        "meta": {
            "family": report.family.value if report else None,
            "p": nl.p,
            "n": nl.n,
            "cor": report.cor if report else 0,
            "modulus": _modulus(nl.modulus),
            "report": report.model_dump(mode="json") if report else None,
        },
        "inputs": [{"wire": w, "class": k} for w, k in zip(nl.primary_inputs, nl.input_classes)],
        "gates": [
            {
                "id": g.id,
                "kind": g.kind.value,
                "in": [_signal(s) for s in g.inputs],
                "out": list(g.outputs),
            }
            for g in nl.gates
        ],
        "outputs": outputs,
        "wire_count": nl.wire_count,
    }


def export_json(nl: Netlist) -> str:
    """Deterministic JSON text of a netlist and its build report."""
    return json.dumps(netlist_to_dict(nl), indent=2) + "\n"


def import_json(text: str) -> Netlist:
    """
    Rebuild a netlist from export_json output.

    Raises:
        json.JSONDecodeError: malformed text
        pydantic.ValidationError: the netlist violates a structural invariant
    """
    data = json.loads(text)
    meta = data["meta"]
    outputs = []
    for name, port in data["outputs"].items():
        if port["kind"] == "d1":
            outputs.append(D1Output(
                name=name,
                modulus=_read_modulus(port["modulus"]),
                zero=_read_signal(port["zero"]),
                magnitude=[_read_signal(s) for s in port["magnitude"]],
            ))
        else:
            outputs.append(PlainResidue(
                name=name,
                modulus=_read_modulus(port["modulus"]),
                signals=[_read_signal(s) for s in port["signals"]],
                correction=port.get("correction", 0),
                canonical=port.get("canonical", True),
            ))
    netlist = Netlist(
        p=meta["p"],
        n=meta["n"],
        modulus=_read_modulus(meta["modulus"]),
        primary_inputs=[entry["wire"] for entry in data["inputs"]],
        input_classes=[entry["class"] for entry in data["inputs"]],
        gates=[
            Gate(id=g["id"], kind=GateKind(g["kind"]), inputs=[_read_signal(s) for s in g["in"]], outputs=g["out"])
            for g in data["gates"]
        ],
        outputs=outputs,
        wire_count=data["wire_count"],
        report=BuildReport(**meta["report"]) if meta.get("report") else None,
    )
    logger.debug(f"Imported netlist: {netlist.p} inputs, {len(netlist.gates)} gates")
    return netlist
