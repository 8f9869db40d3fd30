"""Validate JSON inputs against the shipped schemas.

usage: validate_schemas.py SCHEMA_DIR FILE...
"""

import json
import pathlib
import sys

import jsonschema
from referencing import Registry, Resource


def main() -> int:
    schema_dir = pathlib.Path(sys.argv[1])
    schemas = {p.name: json.loads(p.read_text()) for p in schema_dir.glob("*.schema.json")}
    registry = Registry().with_resources(
        (name, Resource.from_contents(s)) for name, s in schemas.items()
    )
    bad = 0
    for path in map(pathlib.Path, sys.argv[2:]):
        doc = json.loads(path.read_text())
        if "dom" in doc:
            name = "map.schema.json"
        elif "elements" in doc:
            name = "poset.schema.json"
        else:
            name = "space.schema.json"
        validator = jsonschema.Draft202012Validator(schemas[name], registry=registry)
        for err in validator.iter_errors(doc):
            print(f"{path.name}: /{'/'.join(map(str, err.absolute_path))}: {err.message}")
            bad += 1
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
