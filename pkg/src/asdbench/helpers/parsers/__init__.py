from .arff_parser import parse_arff, split_values
from .arff_writer import serialize_arff
from .csv_parser import parse_csv, parse_schema_sidecar


__all__ = [
    "parse_arff",
    "parse_csv",
    "parse_schema_sidecar",
    "serialize_arff",
    "split_values",
]
