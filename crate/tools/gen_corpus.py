"""Writes the golden spec corpus under corpus/golden."""

import json
import math
import os

OUT = os.path.join(os.path.dirname(__file__), "..", "corpus", "golden")


def lin(id_, lo, hi, **kw):
    return {"id": id_, "kind": "linear", "range": {"lo": lo, "hi": hi}, **kw}


def axis(side, ref, **kw):
    return {"side": side, "transform_ref": ref, **kw}


def box(x="x", y="y", **kw):
    return [axis("bottom", x, **kw), axis("left", y, **kw), axis("top", x, tick_config={"labels_visible": False}),
            axis("right", y, tick_config={"labels_visible": False})]


def xy(x, y, **style):
    return {"kind": "xy", "x": x, "y": y, "style": style}


def layer(id_, graphs, x="x", y="y", **kw):
    return {"id": id_, "x_transform_ref": x, "y_transform_ref": y, "graphs": graphs, **kw}


def r(v, n=4):
    return None if v is None or (isinstance(v, float) and math.isnan(v)) else round(v, n)


def write(name, plots, csv=None):
    with open(os.path.join(OUT, name + ".json"), "w") as f:
        json.dump({"version": 1, "plots": plots}, f, indent=1)
        f.write("\n")
    for fname, text in (csv or {}).items():
        with open(os.path.join(OUT, fname), "w") as f:
            f.write(text)


def main():
    os.makedirs(OUT, exist_ok=True)
    xs = [i * 0.25 for i in range(41)]

    write("01_line_linear", [{
        "id": "main", "title": "Damped oscillation",
        "transforms": [lin("x", 0, 10), lin("y", -1.2, 1.2)],
        "axes": [axis("bottom", "x", axis_label="time (s)", grid_lines=True),
                 axis("left", "y", axis_label="amplitude", grid_lines=True)],
        "layers": [layer("signal", [
            xy(xs, [r(math.exp(-x / 4) * math.cos(2 * x)) for x in xs], color="#1f4fbf", stroke_width=1.5),
            xy(xs, [r(math.exp(-x / 4)) for x in xs], color="#bf3f1f", line="dashed"),
        ])],
    }])

    sx = list(range(1, 9))
    write("02_symbols", [{
        "id": "sym", "title": "Symbols",
        "transforms": [lin("x", 0, 9), lin("y", 0, 6)],
        "axes": box(),
        "layers": [layer("marks", [
            xy(sx, [k + 0.5 * (i % 2) for i in sx], line="none", symbol=s, symbol_size=7, color=c)
            for k, (s, c) in enumerate([("circle", "#000000"), ("square", "#c01010"), ("cross", "#108010"),
                                       ("triangle", "#1010c0"), ("dot", "#806000")], start=1)
        ])],
    }])

    hx = list(range(0, 12))
    write("03_histogram", [{
        "id": "hist", "title": "Counts per bin",
        "transforms": [lin("x", -0.5, 11.5), lin("y", 0, 40)],
        "axes": [axis("bottom", "x", axis_label="bin"), axis("left", "y", axis_label="count", grid_lines=True)],
        "layers": [layer("bars", [xy(hx, [3, 7, 12, 20, 31, 36, 33, 25, 16, 9, 4, 1], chart_type="histogram",
                                     color="#303080", stroke_width=2)])],
        "annotations": [{"kind": "hline", "y": 18.0, "style": {"color": "#c03030", "line": "dashed"}}],
    }])

    ex = [1, 2, 3, 4, 5, 6, 7]
    write("04_errorbars", [{
        "id": "err", "title": "Measurements",
        "transforms": [lin("x", 0, 8), lin("y", 0, 12)],
        "axes": box(),
        "layers": [layer("data", [{
            "kind": "xy_error", "x": ex, "y": [2.1, 3.9, 5.2, 6.8, 8.1, 9.4, 10.2],
            "x_err_lo": [0.2] * 7, "x_err_hi": [0.3] * 7,
            "y_err_lo": [0.5, 0.6, 0.4, 0.8, 0.7, 0.5, 0.9], "y_err_hi": [0.7, 0.5, 0.6, 0.6, 0.9, 0.8, 0.7],
            "style": {"symbol": "square", "symbol_size": 5, "color": "#204020"},
        }])],
    }])

    lx = [10 ** (i / 8) for i in range(0, 41)]
    write("05_log_axes", [{
        "id": "log", "title": "Power law",
        "transforms": [{"id": "x", "kind": "log", "range": {"lo": 1, "hi": 1e5}},
                       {"id": "y", "kind": "log", "range": {"lo": 0.01, "hi": 1e3}}],
        "axes": [axis("bottom", "x", axis_label="frequency (Hz)", grid_lines=True),
                 axis("left", "y", axis_label="power", grid_lines=True)],
        "layers": [layer("spec", [xy([r(v, 6) for v in lx], [r(200 * v ** -0.8, 6) for v in lx], color="#7a1a7a")])],
    }])

    day = 86400
    t0 = 1262304000  # 2010-01-01T00:00Z
    rows = ["t,temp"] + [f"{t0 + i * day},{round(5 + 6 * math.sin(i / 5) + (i % 3) * 0.5, 2)}" for i in range(60)]
    write("06_date_axis", [{
        "id": "date", "title": "Daily temperature",
        "transforms": [{"id": "t", "kind": "date", "range": {"lo": t0, "hi": t0 + 59 * day}}, lin("v", -5, 15)],
        "axes": [axis("bottom", "t", grid_lines=True), axis("left", "v", axis_label="°C")],
        "layers": [layer("series", [{"kind": "xy", "x": {"csv": "06_daily.csv", "column": "t"},
                                     "y": {"csv": "06_daily.csv", "column": "temp"},
                                     "style": {"color": "#a04000", "symbol": "dot", "symbol_size": 3}}],
                         x="t", y="v")],
    }], csv={"06_daily.csv": "\n".join(rows) + "\n"})

    stars_ra = [82.5, 83.1, 83.8, 84.05, 84.7, 85.2, 83.4]
    stars_de = [-5.4, -4.9, -5.9, -1.2, -2.0, -1.9, -0.3]
    write("07_sexagesimal", [{
        "id": "sky", "title": "Orion belt field",
        "transforms": [{"id": "ra", "kind": "sexagesimal", "sexa_mode": "hms", "range": {"lo": 82, "hi": 86},
                        "inverted": True},
                       {"id": "dec", "kind": "sexagesimal", "sexa_mode": "dms", "range": {"lo": -6.5, "hi": 0.5}}],
        "axes": [axis("bottom", "ra", axis_label="RA", grid_lines=True),
                 axis("left", "dec", axis_label="Dec", grid_lines=True)],
        "layers": [layer("stars", [xy(stars_ra, stars_de, line="none", symbol="circle", symbol_size=6,
                                      color="#000060")], x="ra", y="dec")],
        "annotations": [{"kind": "text", "anchor": {"data": {"x": 84.05, "y": -1.2}}, "text": "Alnitak",
                         "size": 10}],
    }])

    gw, gh = 24, 16
    grid = [[r(math.sin(i / 3) * math.cos(j / 4), 4) for i in range(gw)] for j in range(gh)]
    write("08_grid_heat", [{
        "id": "heat", "title": "Field map",
        "transforms": [lin("x", 0, 24), lin("y", 0, 16)],
        "axes": box(),
        "layers": [layer("map", [{"kind": "grid", "values": grid, "x_extent": {"lo": 0, "hi": 24},
                                  "y_extent": {"lo": 0, "hi": 16}, "ramp": "heat",
                                  "norm": {"explicit": {"lo": -1, "hi": 1}}}])],
    }])

    rw, rh = 16, 12
    write("09_rgb_image", [{
        "id": "rgb", "title": "Composite",
        "transforms": [lin("x", 0, 16), lin("y", 0, 12)],
        "axes": box(),
        "layers": [layer("img", [{"kind": "rgb",
                                  "r": [[r(i / (rw - 1), 3) for i in range(rw)] for _ in range(rh)],
                                  "g": [[r(j / (rh - 1), 3) for _ in range(rw)] for j in range(rh)],
                                  "b": [[r(0.5 + 0.5 * math.sin((i + j) / 3), 3) for i in range(rw)] for j in range(rh)],
                                  "x_extent": {"lo": 0, "hi": 16}, "y_extent": {"lo": 0, "hi": 12}}])],
        "annotations": [{"kind": "rect", "x0": 2, "x1": 6, "y0": 2, "y1": 5, "fill": "#ffffff",
                         "outline": {"color": "#000000", "stroke_width": 2}}],
    }])

    def small(id_, row, col, weight, graphs, title):
        return {"id": id_, "title": title, "transforms": [lin("x", 0, 10), lin("y", 0, 10)],
                "axes": [axis("bottom", "x"), axis("left", "y")],
                "layers": [layer("l", graphs)], "layout_hints": {"row": row, "col": col, "weight": weight}}

    write("10_nested_grid", [{
        "id": "figure", "title": "Four panels",
        "children": [
            small("a", 0, 0, 2, [xy([0, 5, 10], [0, 10, 0], color="#aa0000")], "A"),
            small("b", 0, 1, 1, [xy([0, 10], [10, 0], color="#00aa00")], "B"),
            small("c", 1, 0, 1, [xy([0, 2, 4, 6, 8, 10], [1, 4, 2, 8, 5, 9], chart_type="histogram")], "C"),
            {"id": "d", "title": "D", "layout_hints": {"row": 1, "col": 1},
             "children": [{"id": "d1", "transforms": [lin("x", 0, 10), lin("y", 0, 10)],
                           "layers": [layer("l", [xy([0, 10], [5, 5])])], "layout_hints": {"row": 0, "col": 0}},
                          {"id": "d2", "transforms": [lin("x", 0, 10), lin("y", 0, 10)],
                           "layers": [layer("l", [xy([5, 5], [0, 10])])], "layout_hints": {"row": 0, "col": 1}}]},
        ],
    }])

    cx = list(range(-10, 41, 5))
    write("11_multi_scale", [{
        "id": "dual", "title": "Two scales",
        "transforms": [lin("c", -10, 40), lin("f", 14, 104), lin("p", 0, 100), lin("q", 0, 1)],
        "axes": [axis("bottom", "c", axis_label="°C"), axis("top", "f", axis_label="°F"),
                 axis("left", "p", axis_label="pressure"), axis("right", "q", axis_label="fraction")],
        "layers": [layer("pressure", [xy(cx, [r(50 + 1.2 * c) for c in cx], color="#0000aa", symbol="circle")],
                         x="c", y="p", z_order=1),
                   layer("fraction", [xy([r(32 + 1.8 * c) for c in cx], [r(1 / (1 + math.exp(-c / 8)), 4) for c in cx],
                                         color="#aa5500", line="dashed")], x="f", y="q", z_order=0)],
    }])

    write("12_annotations", [{
        "id": "ann", "title": "Annotated ± µ°",
        "transforms": [lin("x", 0, 100), lin("y", 0, 50)],
        "axes": box(),
        "layers": [layer("curve", [xy([0, 20, 40, 60, 80, 100], [5, 30, 20, 45, 25, 40], color="#333333")])],
        "annotations": [
            {"kind": "rect", "x0": 55, "x1": 70, "y0": 5, "y1": 15, "fill": "#c8e0ff"},
            {"kind": "vline", "x": 40, "style": {"color": "#008000"}},
            {"kind": "hline", "y": 25, "style": {"color": "#800000", "dash_pattern": [2, 2], "line": "dashed"}},
            {"kind": "text", "anchor": {"fraction": {"x": 0.05, "y": 0.9}}, "text": "E = 10^3 J", "size": 12},
            {"kind": "text", "anchor": {"data": {"x": 60, "y": 45}}, "text": "peak", "color": "#0000ff"},
        ],
    }])

    mrows = ["c0,c1,c2,c3,c4,c5"] + [",".join(str(round((i * j) % 7 / 6, 3)) if (i, j) != (2, 3) else "nan"
                                            for i in range(6)) for j in range(5)]
    write("13_csv_matrix", [{
        "id": "mat", "title": "Matrix from CSV",
        "transforms": [lin("x", 0, 6), lin("y", 0, 5)],
        "axes": box(),
        "layers": [layer("m", [{"kind": "grid", "values": {"csv": "13_matrix.csv"},
                                "x_extent": {"lo": 0, "hi": 6}, "y_extent": {"lo": 0, "hi": 5},
                                "ramp": "gray", "norm": "linear_minmax"}])],
    }], csv={"13_matrix.csv": "\n".join(mrows) + "\n"})

    write("14_tick_config", [{
        "id": "ticks", "title": "Tick options",
        "transforms": [lin("x", 0, 1), lin("y", 0, 1000, inverted=True)],
        "axes": [axis("bottom", "x", tick_config={"major": {"explicit_positions": [0, 0.25, 0.5, 0.75, 1]},
                                                   "explicit_labels": ["0", "¼", "½", "¾", "1"]}),
                 axis("top", "x", ticks_outward=True, tick_config={"minor_count": 1, "label_format": "%.1f"}),
                 axis("left", "y", tick_config={"major": {"target_count": 3}, "minor_count": 0}),
                 axis("right", "y", visible=False)],
        "layers": [layer("l", [xy([0, 0.5, 1], [0, 800, 300], color="#006060", stroke_width=3)])],
    }])

    gx = [i for i in range(13)]
    gy = [1, 3, None, 4, 6, 5, None, None, 2, 3, 5, 4, 6]
    write("15_gaps_margins", [{
        "id": "gaps", "title": "Missing samples",
        "transforms": [lin("x", 0, 12), lin("y", 0, 7)],
        "axes": [axis("bottom", "x"), axis("left", "y")],
        "margins": {"top": 10, "right": 20, "bottom": 10, "left": 10},
        "layers": [layer("l", [xy(gx, gy, color="#000000", symbol="cross", symbol_size=6)], visible=True),
                   layer("hidden", [xy(gx, [3] * 13, color="#ff0000")], visible=False)],
    }])


if __name__ == "__main__":
    main()
