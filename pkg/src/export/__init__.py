"""
Netlist serializers: JSON and structural Verilog
"""

from .hdl import export_hdl
from .json_codec import export_json, import_json, netlist_to_dict

__all__ = ["export_hdl", "export_json", "import_json", "netlist_to_dict"]
