"""
Text rendering of shorthand tables and correction rows
"""

from typing import List

from src.common.models import CorrectionLedger, ShorthandTable


def _row(cells: List[str], cell_width: int) -> str:
    return "| " + " | ".join(cell.ljust(cell_width) for cell in cells) + " |"


def render_shorthand(t: ShorthandTable) -> str:
    """
    Render a CSA tree in the shorthand layout, most significant class first.

    Count rows alternate with allocation rows tagged "CSA Stage s"; the last
    row holds the final counts. A table without stages renders as its header.

    Example (mod 9, 18 inputs):
        | G2    | G1    | G0    |
        | 6     | 6     | 6     |
        | 2 FAs | 2 FAs | 2 FAs | CSA Stage 1
        ...
        | 2     | 2     | 2     |
    """
    order = list(reversed(range(t.width)))
    header = [f"G{k}" for k in order]
    body: List[List[str]] = []
    tags: List[str] = []
    for number, stage in enumerate(t.stages, start=1):
        body.append([str(stage.entering[k]) for k in order])
        tags.append("")
        body.append([stage.allocations[k].label() for k in order])
        tags.append(f" CSA Stage {number}")
    if t.stages:
        body.append([str(t.final_counts[k]) for k in order])
        tags.append("")

    cell_width = max(len(cell) for row in [header, *body] for cell in row)
    lines = [_row(header, cell_width)]
    lines.extend(_row(cells, cell_width) + tag for cells, tag in zip(body, tags))
    return "\n".join(lines) + "\n"


def render_corrections(ledger: CorrectionLedger, p: int) -> str:
    """
    One correction row: input width, block charges, CSA stage charges and COR.

    Example: "16 | -7 | -7 | -1 | -2-1-1 | |-19|_9 = 8"
    """
    blocks = [str(amount) for amount in ledger.amounts("B")]
    stages = "".join(f"{amount:+d}" if i else str(amount) for i, amount in enumerate(ledger.amounts("CSA")))
    m = ledger.modulus.value()
    cells = [str(p), *blocks, stages or "0", f"|{ledger.raw_total}|_{m} = {ledger.accumulated}"]
    return " | ".join(cells)
