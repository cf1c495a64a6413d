#!/usr/bin/env python
#coding:utf-8
# Author:  treebankqa developers
# Purpose: static SVG charts of plot data series
# Created: 10.03.2026
# Copyright (C) 2026, treebankqa developers
# License: MIT License
"""
Plot data is a list of :class:`PlotSeries`; :func:`render_svg` draws the
series of one figure as a line chart over categorical x values::

    svg = render_svg(report.plot_series('time'), title='Time of annotation')

"""
from dataclasses import dataclass

import svgwrite

PALETTE = (
    (31, 119, 180), (255, 127, 14), (44, 160, 44), (214, 39, 40),
    (148, 103, 189), (140, 86, 75), (227, 119, 194), (127, 127, 127),
)
MARGIN = 50
LEGEND_WIDTH = 170


@dataclass(frozen=True)
class PlotSeries:
    figure: str
    name: str
    points: tuple  # ((x, y), ...)


def _value_range(series):
    values = [y for s in series for _, y in s.points]
    low, high = min(values), max(values)
    if low == high:
        low, high = low - 1, high + 1
    pad = (high - low) * 0.05
    return low - pad, high + pad


def render_svg(series, title=None, size=(640, 400)):
    """ Line chart of `series` as SVG string.

    :param series: list of :class:`PlotSeries`
    :param string title: chart title
    :param size: ``(width, height)`` in px
    :raises ValueError: no data points
    """
    series = [s for s in series if s.points]
    if not series:
        raise ValueError("no data points to draw.")
    width, height = size
    plot_width = width - 2 * MARGIN - LEGEND_WIDTH
    plot_height = height - 2 * MARGIN
    xs = list(dict.fromkeys(x for s in series for x, _ in s.points))
    low, high = _value_range(series)

    def px(x):
        if len(xs) == 1:
            return MARGIN + plot_width / 2.
        return MARGIN + plot_width * xs.index(x) / float(len(xs) - 1)

    def py(y):
        return MARGIN + plot_height * (high - y) / (high - low)

    dwg = svgwrite.Drawing(size=(width, height), profile='full', debug=False)
    dwg.add(dwg.rect(insert=(0, 0), size=(width, height), fill='white'))
    if title:
        dwg.add(dwg.text(title, insert=(MARGIN, MARGIN / 2.), font_size=14, font_family='sans-serif'))

    axes = dwg.add(dwg.g(stroke='black', stroke_width=1))
    axes.add(dwg.line((MARGIN, MARGIN), (MARGIN, MARGIN + plot_height)))
    axes.add(dwg.line((MARGIN, MARGIN + plot_height), (MARGIN + plot_width, MARGIN + plot_height)))
    labels = dwg.add(dwg.g(font_size=10, font_family='sans-serif'))
    for x in xs:
        labels.add(dwg.text(str(x), insert=(px(x), MARGIN + plot_height + 15), text_anchor='middle'))
    for i in range(5):
        y = low + (high - low) * i / 4.
        labels.add(dwg.text("%.4g" % y, insert=(MARGIN - 5, py(y) + 3), text_anchor='end'))

    for index, s in enumerate(series):
        color = svgwrite.rgb(*PALETTE[index % len(PALETTE)])
        points = [(px(x), py(y)) for x, y in s.points]
        group = dwg.add(dwg.g(stroke=color, fill=color))
        if len(points) > 1:
            group.add(dwg.polyline(points, fill='none', stroke_width=2))
        for point in points:
            group.add(dwg.circle(center=point, r=3))
        legend_y = MARGIN + 15 * index
        group.add(dwg.rect(insert=(width - LEGEND_WIDTH, legend_y - 8), size=(10, 10)))
        labels.add(dwg.text(s.name, insert=(width - LEGEND_WIDTH + 15, legend_y + 1)))
    return dwg.tostring()


def save_svg(series, filename, title=None, size=(640, 400)):
    with open(filename, mode='w', encoding='utf-8') as fp:
        fp.write(render_svg(series, title, size))
