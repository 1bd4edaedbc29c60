"""Spec file ingestion and export"""
from .spec_exporter import SpecExporter, export_spec
from .spec_parser import SpecParser, parse_combination, parse_spec, parse_spec_file

__all__ = ["SpecExporter", "export_spec", "SpecParser", "parse_combination", "parse_spec", "parse_spec_file"]
