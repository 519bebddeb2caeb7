import xml.etree.ElementTree as ET

import pytest

from momqmc.harness import ResultRow
from momqmc.svgplot import (
    ERROR_FLOOR,
    MARGIN_TOP,
    comparison_svg,
    difference_svg,
    emit_plots,
    x_scale,
    y_scale,
)

SVG_NS = "{http://www.w3.org/2000/svg}"


def _row(kind, dim, log2n, err_median, err_mean):
    return ResultRow(
        pointset_kind=kind, dim=dim, log2n=log2n, replicates=11, trials=25,
        master_seed=0, median_result=0.0, mean_result=0.0, exact_value=1.0,
        abs_err_median=err_median, abs_err_mean=err_mean,
        diff=err_mean - err_median,
    )


def _grid_rows(kinds=("lattice", "dnb2"), dims=(2, 3, 5, 8), log2ns=range(8, 20)):
    rows = []
    for kind in kinds:
        for dim in dims:
            for m in log2ns:
                err = 2.0 ** (-0.9 * m) / dim
                rows.append(_row(kind, dim, m, err, err * 1.5))
    return rows


def _parse(path):
    return ET.parse(path).getroot()


def _polylines(root):
    return root.findall(f".//{SVG_NS}polyline")


class TestEmitPlots:
    def test_file_count_and_names(self, tmp_path):
        paths = emit_plots(_grid_rows(), tmp_path)
        names = sorted(p.name for p in paths)
        expected = sorted(
            f"{kind}_d{dim}_{suffix}.svg"
            for kind in ("lattice", "dnb2")
            for dim in (2, 3, 5, 8)
            for suffix in ("comparison", "difference")
        )
        assert names == expected
        assert len(paths) == 16  # 4 comparison + 4 difference per kind

    def test_all_files_well_formed_with_expected_polylines(self, tmp_path):
        for path in emit_plots(_grid_rows(), tmp_path):
            root = _parse(path)
            polys = _polylines(root)
            if path.name.endswith("comparison.svg"):
                assert len(polys) == 2
            else:
                assert len(polys) == 1
                zero = [el for el in root.iter(f"{SVG_NS}line")
                        if el.get("id") == "zero-line"]
                assert len(zero) == 1

    def test_difference_markers_one_per_sample_size(self, tmp_path):
        rows = _grid_rows(kinds=("lattice",), dims=(2,))
        paths = emit_plots(rows, tmp_path)
        comparison = next(p for p in paths if "comparison" in p.name)
        markers = [el for el in _parse(comparison).iter(f"{SVG_NS}line")
                   if el.get("class") == "difference-marker"]
        assert len(markers) == 12

    def test_sparse_group_rejected(self, tmp_path):
        rows = [_row("lattice", 2, 8, 1e-3, 2e-3)]
        with pytest.raises(ValueError, match=r"pointset=lattice, dim=2"):
            emit_plots(rows, tmp_path)

    def test_zero_differences_hug_the_zero_line(self, tmp_path):
        rows = [_row("dnb2", 3, m, 1e-4, 1e-4) for m in range(8, 12)]
        paths = emit_plots(rows, tmp_path)
        diff_path = next(p for p in paths if "difference" in p.name)
        root = _parse(diff_path)
        zero_y = float([el for el in root.iter(f"{SVG_NS}line")
                        if el.get("id") == "zero-line"][0].get("y1"))
        pts = _polylines(root)[0].get("points").split()
        ys = [float(p.split(",")[1]) for p in pts]
        assert all(abs(y - zero_y) < 1e-9 for y in ys)


class TestGeometry:
    def test_monotone_errors_give_increasing_pixel_y(self, tmp_path):
        # SVG y grows downward, so decreasing error must increase pixel y.
        rows = [_row("lattice", 2, m, 10.0 ** (-(m - 4) / 2.0), 2e-1 * 0.5**m)
                for m in range(8, 16)]
        paths = emit_plots(rows, tmp_path)
        comparison = next(p for p in paths if "comparison" in p.name)
        median_poly = _polylines(_parse(comparison))[0]
        ys = [float(p.split(",")[1]) for p in median_poly.get("points").split()]
        assert all(a < b for a, b in zip(ys, ys[1:]))

    def test_pixel_transform_recomputable(self):
        import math

        rows = [_row("lattice", 2, m, 10.0 ** (-m / 4.0), 10.0 ** (-m / 4.0))
                for m in range(8, 13)]
        svg = comparison_svg("lattice", 2, rows)
        med = [math.log10(max(r.abs_err_median, ERROR_FLOOR)) for r in rows]
        sx = x_scale(8, 12)
        sy = y_scale(math.floor(min(med)), math.ceil(max(med)))
        expected = " ".join(
            f"{sx.to_px(m):.2f},{sy.to_px(v):.2f}" for m, v in zip(range(8, 13), med)
        )
        assert f'points="{expected}"' in svg

    def test_y_scale_orientation(self):
        sy = y_scale(0.0, 1.0)
        assert sy.to_px(1.0) == MARGIN_TOP
        assert sy.to_px(0.0) > sy.to_px(1.0)

    def test_difference_svg_zero_line_position(self):
        rows = [_row("lattice", 2, m, 1e-3, 1e-3 + (-1) ** m * 1e-4) for m in range(8, 12)]
        svg = difference_svg("lattice", 2, rows)
        assert 'id="zero-line"' in svg
        assert svg.count("<polyline") == 1
