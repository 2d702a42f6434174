"""Writes corpus/invalid: specs that must fail validation, plus expect.json
listing the exit code, first error code and path fragment for each."""

import copy
import json
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "corpus", "invalid")

BASE = {
    "version": 1,
    "plots": [{
        "id": "p",
        "transforms": [{"id": "x", "kind": "linear", "range": {"lo": 0, "hi": 10}},
                       {"id": "y", "kind": "linear", "range": {"lo": 0, "hi": 10}}],
        "axes": [{"side": "bottom", "transform_ref": "x"}, {"side": "left", "transform_ref": "y"}],
        "layers": [{"id": "l", "x_transform_ref": "x", "y_transform_ref": "y",
                    "graphs": [{"kind": "xy", "x": [1, 2, 3], "y": [4, 5, 6]}]}],
    }],
}


def spec(edit):
    s = copy.deepcopy(BASE)
    edit(s)
    return s


def plot(s):
    return s["plots"][0]


CASES = [
    ("01_log_nonpositive", lambda s: plot(s)["transforms"][1].update(kind="log", range={"lo": -1, "hi": 10}),
     "LOG_NONPOSITIVE", "plots[0].transforms[1].range"),
    ("02_missing_csv", lambda s: plot(s)["layers"][0]["graphs"][0].update(y={"csv": "absent.csv", "column": "y"}),
     "DATA_FILE", "absent.csv"),
    ("03_array_mismatch", lambda s: plot(s)["layers"][0]["graphs"][0].update(y=[1, 2]),
     "ARRAY_MISMATCH", "plots[0].layers[0].graphs[0].y"),
    ("04_unresolved_ref", lambda s: plot(s)["layers"][0].update(x_transform_ref="tx9"),
     "UNRESOLVED_REF", "plots[0].layers[0].x_transform_ref"),
    ("05_duplicate_id", lambda s: plot(s)["transforms"][1].update(id="x"),
     "DUPLICATE_ID", "plots[0].transforms[1].id"),
    ("06_bad_version", lambda s: s.update(version=2),
     "SCHEMA", "version"),
    ("07_unknown_field", lambda s: plot(s)["axes"][0].update(colour="red"),
     "SCHEMA", "plots[0].axes[0]"),
    ("08_inverted_range", lambda s: plot(s)["transforms"][0].update(range={"lo": 10, "hi": 0}),
     "INVALID_RANGE", "plots[0].transforms[0].range"),
    ("09_orientation_conflict", lambda s: plot(s)["axes"].append({"side": "top", "transform_ref": "y"}),
     "ORIENTATION_CONFLICT", "plots[0].transforms[1]"),
    ("10_bad_pattern", lambda s: plot(s)["axes"][0].update(tick_config={"label_format": "%q"}),
     "BAD_PATTERN", "plots[0].axes[0].tick_config.label_format"),
]


def main():
    os.makedirs(OUT, exist_ok=True)
    expect = {}
    for name, edit, code, path in CASES:
        with open(os.path.join(OUT, name + ".json"), "w") as f:
            json.dump(spec(edit), f, indent=1)
            f.write("\n")
        expect[name + ".json"] = {"exit": 2, "code": code, "path": path}
    with open(os.path.join(OUT, "expect.json"), "w") as f:
        json.dump(expect, f, indent=1, sort_keys=True)
        f.write("\n")


if __name__ == "__main__":
    main()
