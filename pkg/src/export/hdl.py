"""
Structural Verilog emitter.

The module instantiates FA and HA cells (defined alongside it with gate
primitives), `not` primitives for every wire read inverted, and 2-input
and/or/xor primitives for final-adder glue. No generate blocks, always
blocks or vendor cells are used.
"""

import logging
from typing import Dict, List, Optional, Set

from src.common.models import D1Output, GateKind, Netlist, Signal

logger = logging.getLogger(__name__)

CELL_LIBRARY = """\
module FA (input wire a, input wire b, input wire c, output wire s, output wire co);
  wire ab, ac, bc;
  xor (s, a, b, c);
  and (ab, a, b);
  and (ac, a, c);
  and (bc, b, c);
  or (co, ab, ac, bc);
endmodule

module HA (input wire a, input wire b, output wire s, output wire co);
  xor (s, a, b);
  and (co, a, b);
endmodule
"""

_PRIMITIVES = {GateKind.AND: "and", GateKind.OR: "or", GateKind.XOR: "xor"}


def _module_name(nl: Netlist) -> str:
    if nl.report is not None:
        return f"resgen_{nl.report.family.value.replace('-', '_')}_p{nl.p}_n{nl.n}"
    return f"resgen_p{nl.p}_n{nl.n}"


def _ref(signal: Signal) -> str:
    return f"wn[{signal.wire}]" if signal.inverted else f"w[{signal.wire}]"


def _port_names(nl: Netlist) -> Dict[str, List[str]]:
    d1_ports = sum(1 for port in nl.outputs if isinstance(port, D1Output))
    names = {}
    for port in nl.outputs:
        if isinstance(port, D1Output):
            prefix = f"{port.name}_" if d1_ports > 1 else ""
            names[port.name] = [f"{prefix}x_z", f"{prefix}mag"]
        else:
            names[port.name] = [port.name]
    return names


def export_hdl(nl: Netlist, module_name: Optional[str] = None) -> str:
    """
    Flat structural Verilog text of a netlist, preceded by the FA/HA cells.

    Inputs are x[p-1:0]; a plain port becomes one bus named after the port,
    a D1 port becomes x_z and mag[n-1:0].
    """
    name = module_name or _module_name(nl)
    names = _port_names(nl)
    inverted: Set[int] = {s.wire for g in nl.gates for s in g.inputs if s.inverted}
    inverted |= {s.wire for port in nl.outputs for s in port.signals if s.inverted}

    header = [f"  input wire [{nl.p - 1}:0] x" if nl.p else None]
    for port in nl.outputs:
        if isinstance(port, D1Output):
            zero_name, mag_name = names[port.name]
            header.append(f"  output wire {zero_name}")
            header.append(f"  output wire [{len(port.magnitude) - 1}:0] {mag_name}")
        else:
            header.append(f"  output wire [{len(port.signals) - 1}:0] {port.name}")
    header = [line for line in header if line]

    s: List[str] = [CELL_LIBRARY]
    s.append(f"// {name}: {len(nl.gates)} gates over {nl.p} inputs")
    s.append(f"module {name} (")
    s.append(",\n".join(header))
    s.append(");")
    s.append(f"  wire [{max(nl.wire_count, 1) - 1}:0] w;")
    s.append(f"  wire [{max(nl.wire_count, 1) - 1}:0] wn;")
    for i, wire in enumerate(nl.primary_inputs):
        s.append(f"  assign w[{wire}] = x[{i}];")
    for wire in sorted(inverted):
        s.append(f"  not n{wire} (wn[{wire}], w[{wire}]);")

    for g in nl.gates:
        ins = [_ref(signal) for signal in g.inputs]
        if g.kind == GateKind.FA:
            s.append(f"  FA g{g.id} (.a({ins[0]}), .b({ins[1]}), .c({ins[2]}), "
                     f".s(w[{g.outputs[0]}]), .co(w[{g.outputs[1]}]));")
        elif g.kind == GateKind.HA:
            s.append(f"  HA g{g.id} (.a({ins[0]}), .b({ins[1]}), .s(w[{g.outputs[0]}]), .co(w[{g.outputs[1]}]));")
        elif g.kind == GateKind.NOT:
            s.append(f"  not g{g.id} (w[{g.outputs[0]}], {ins[0]});")
        elif g.kind == GateKind.CONST0:
            s.append(f"  assign w[{g.outputs[0]}] = 1'b0;")
        elif g.kind == GateKind.CONST1:
            s.append(f"  assign w[{g.outputs[0]}] = 1'b1;")
        else:
            s.append(f"  {_PRIMITIVES[g.kind]} g{g.id} (w[{g.outputs[0]}], {ins[0]}, {ins[1]});")

    for port in nl.outputs:
        if isinstance(port, D1Output):
            zero_name, mag_name = names[port.name]
            s.append(f"  assign {zero_name} = {_ref(port.zero)};")
            for i, signal in enumerate(port.magnitude):
                s.append(f"  assign {mag_name}[{i}] = {_ref(signal)};")
        else:
            for i, signal in enumerate(port.signals):
                s.append(f"  assign {port.name}[{i}] = {_ref(signal)};")
    s.append("endmodule")
    logger.debug(f"Emitted {name}: {len(inverted)} inverters")
    return "\n".join(s) + "\n"
