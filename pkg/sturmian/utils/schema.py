"""
Output schema checks.

The command line promises a fixed JSON shape per document kind, written down
in config/output_schema.json. This module checks documents against it using
the small subset of JSON Schema the file uses: type, enum, pattern, required,
properties, additionalProperties, items and $ref into "definitions".
"""
import json
import re
from functools import lru_cache
from typing import Any, Dict, List

from sturmian.config.constants import const
from sturmian.models.errors import SchemaError

_TYPE_CHECKS = {
    "object": lambda value: isinstance(value, dict),
    "array": lambda value: isinstance(value, list),
    "string": lambda value: isinstance(value, str),
    "integer": lambda value: isinstance(value, int) and not isinstance(value, bool),
    "boolean": lambda value: isinstance(value, bool),
    "null": lambda value: value is None,
}


@lru_cache(maxsize=None)
def load_schema(path: str = const.OUTPUT_SCHEMA_PATH) -> Dict[str, Any]:
    """Read the schema file once per path."""
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def document_kinds() -> List[str]:
    return sorted(load_schema()["documents"])


def _check(value: Any, rule: Dict[str, Any], definitions: Dict[str, Any], where: str) -> None:
    if "$ref" in rule:
        rule = definitions[rule["$ref"]]

    expected = rule.get("type")
    if expected is not None:
        allowed = expected if isinstance(expected, list) else [expected]
        if not any(_TYPE_CHECKS[name](value) for name in allowed):
            raise SchemaError(f"{where}: expected {' or '.join(allowed)}, got {type(value).__name__}")

    if "enum" in rule and value not in rule["enum"]:
        raise SchemaError(f"{where}: {value!r} is not one of {rule['enum']}")
    if "pattern" in rule and isinstance(value, str) and not re.search(rule["pattern"], value):
        raise SchemaError(f"{where}: {value!r} does not match {rule['pattern']}")

    if isinstance(value, dict):
        for key in rule.get("required", []):
            if key not in value:
                raise SchemaError(f"{where}: missing field {key!r}")
        properties = rule.get("properties", {})
        for key, item in value.items():
            if key in properties:
                _check(item, properties[key], definitions, f"{where}.{key}")
            elif rule.get("additionalProperties", True) is False:
                raise SchemaError(f"{where}: unexpected field {key!r}")

    if isinstance(value, list) and "items" in rule:
        for index, item in enumerate(value):
            _check(item, rule["items"], definitions, f"{where}[{index}]")


def validate_document(kind: str, document: Dict[str, Any]) -> Dict[str, Any]:
    """
    Check a document against the schema of its kind.

    Args:
        kind: Key under "documents" in the schema file
        document: The JSON-ready document

    Returns:
        The same document, for chaining

    Raises:
        SchemaError: on the first mismatch found
    """
    schema = load_schema()
    if kind not in schema["documents"]:
        raise SchemaError(f"Unknown document kind {kind!r}")
    _check(document, schema["documents"][kind], schema.get("definitions", {}), kind)
    return document
