"""
UI Rendering module for Sturmian Lines.

Draws a line, its grid points and a word's broken line on an (n+1) x (n+1)
grid of unit cells, as SVG text, as monospace ASCII, or as a PNG image
through pygame.
"""
import os
from math import floor
from typing import List, Optional, Tuple, Union

from sturmian.analysis.geometry import LineGeometry
from sturmian.config.constants import const, debug_print
from sturmian.models.errors import SturmianError
from sturmian.models.lines import DefiningLine, GridLine, GridPoint
from sturmian.models.reports import RenderSpec
from sturmian.models.words import Word


def _fmt(value) -> str:
    """Stable decimal text for SVG coordinates."""
    text = f"{float(value):.3f}".rstrip("0").rstrip(".")
    return text if text not in ("", "-0") else "0"


class FigureRenderer:
    """Renders grid figures of lines and words."""

    @staticmethod
    def figure_word(spec: RenderSpec) -> Word:
        """The word to draw: the given one, else the word the line generates."""
        if spec.word is not None:
            return spec.word
        if isinstance(spec.line, DefiningLine):
            return LineGeometry.word_from_defining_line(spec.line.alpha, spec.line.rho, spec.n)
        return LineGeometry.mechanical_word(spec.line, spec.n)

    @staticmethod
    def figure_points(spec: RenderSpec) -> List[GridPoint]:
        """Integer points of the line inside the figure; a defining line has none worth marking."""
        if isinstance(spec.line, GridLine):
            return LineGeometry.grid_points(spec.line, spec.n)
        return [
            GridPoint(x, int(spec.line.value_at(x)))
            for x in range(spec.n + 1)
            if spec.line.value_at(x).denominator == 1
        ]

    @staticmethod
    def _line_ends(spec: RenderSpec) -> Tuple[Tuple[int, object], Tuple[int, object]]:
        size = spec.n + 1
        return (0, spec.line.value_at(0)), (size, spec.line.value_at(size))

    @staticmethod
    def render_svg(spec: RenderSpec) -> str:
        """
        SVG document with y pointing up.

        Element order is fixed: grid path, the line, the word polyline, then
        the grid points by increasing x.
        """
        cell = spec.cell_size
        size = spec.n + 1
        margin = const.RENDER_MARGIN
        width = height = 2 * margin + size * cell
        word = FigureRenderer.figure_word(spec)

        parts = [
            f'<svg xmlns="http://www.w3.org/2000/svg" width="{width}" height="{height}" '
            f'viewBox="0 0 {width} {height}">',
            f'<title>{spec.line} n={spec.n} word={word}</title>',
            f'<g transform="translate({margin},{height - margin}) scale(1,-1)">',
        ]

        # Draw grid
        grid = []
        for k in range(size + 1):
            grid.append(f"M{k * cell},0 V{size * cell}")
            grid.append(f"M0,{k * cell} H{size * cell}")
        parts.append(f'<path d="{" ".join(grid)}" stroke="{const.SVG_GRID_COLOR}" stroke-width="1" fill="none"/>')

        # Draw the line across the whole figure
        (x1, y1), (x2, y2) = FigureRenderer._line_ends(spec)
        parts.append(
            f'<line x1="{_fmt(x1 * cell)}" y1="{_fmt(y1 * cell)}" x2="{_fmt(x2 * cell)}" y2="{_fmt(y2 * cell)}" '
            f'stroke="{const.SVG_LINE_COLOR}" stroke-width="2"/>'
        )

        # Draw the broken line of the word
        vertices = " ".join(f"{k * cell},{h * cell}" for k, h in enumerate(word.heights()))
        parts.append(
            f'<polyline points="{vertices}" stroke="{const.SVG_WORD_COLOR}" stroke-width="3" fill="none"/>'
        )

        # Draw grid points last so they stay on top
        for point in FigureRenderer.figure_points(spec):
            parts.append(
                f'<circle cx="{point.x * cell}" cy="{point.y * cell}" r="{const.POINT_RADIUS}" '
                f'fill="{const.SVG_POINT_COLOR}"/>'
            )

        parts.append("</g>")
        parts.append("</svg>")
        return "\n".join(parts) + "\n"

    @staticmethod
    def render_ascii(spec: RenderSpec) -> str:
        """One character per integer point, top row first."""
        word = FigureRenderer.figure_word(spec)
        heights = word.heights()
        points = {point.as_tuple() for point in FigureRenderer.figure_points(spec)}
        rows = [f"line {spec.line}  n={spec.n}  word={word}"]
        for y in range(spec.n + 1, -1, -1):
            row = []
            for x in range(spec.n + 1):
                # Points win over the word, the word over the line
                on_word = heights[x] == y
                on_point = (x, y) in points
                if on_word and on_point:
                    row.append(const.ASCII_BOTH)
                elif on_point:
                    row.append(const.ASCII_POINT)
                elif on_word:
                    row.append(const.ASCII_WORD)
                elif floor(spec.line.value_at(x)) == y:
                    row.append(const.ASCII_LINE)
                else:
                    row.append(const.ASCII_EMPTY)
            rows.append(f"{y:>3} " + "".join(row))
        return "\n".join(rows) + "\n"

    @staticmethod
    def render_png(spec: RenderSpec, path: str) -> None:
        """Draw the figure on an off-screen pygame surface and save it."""
        os.environ.setdefault("PYGAME_HIDE_SUPPORT_PROMPT", "1")
        import pygame

        cell = spec.cell_size
        size = spec.n + 1
        margin = const.RENDER_MARGIN
        side = 2 * margin + size * cell

        def to_screen(x, y) -> Tuple[int, int]:
            return (round(margin + float(x) * cell), round(side - margin - float(y) * cell))

        # Set up surface and draw grid
        surface = pygame.Surface((side, side))
        surface.fill(const.WHITE)
        for k in range(size + 1):
            pygame.draw.line(surface, const.GRAY, to_screen(k, 0), to_screen(k, size))
            pygame.draw.line(surface, const.GRAY, to_screen(0, k), to_screen(size, k))

        # Draw the line
        start, end = FigureRenderer._line_ends(spec)
        pygame.draw.line(surface, const.RED, to_screen(*start), to_screen(*end), 2)

        # Draw the broken line of the word
        word = FigureRenderer.figure_word(spec)
        vertices = [to_screen(k, h) for k, h in enumerate(word.heights())]
        pygame.draw.lines(surface, const.BLACK, False, vertices, 3)

        # Draw grid points
        for point in FigureRenderer.figure_points(spec):
            pygame.draw.circle(surface, const.BLUE, to_screen(point.x, point.y), const.POINT_RADIUS)

        pygame.image.save(surface, path)
        debug_print(f"Saved {side}x{side} png to {path}")

    @staticmethod
    def render(spec: RenderSpec, path: Optional[str] = None) -> Union[str, None]:
        """
        Render the figure in the requested format.

        Text formats are returned (and also written when a path is given);
        png needs a path and returns None.
        """
        if spec.format == "png":
            if path is None:
                raise SturmianError("png output needs an output path")
            FigureRenderer.render_png(spec, path)
            return None
        document = FigureRenderer.render_svg(spec) if spec.format == "svg" else FigureRenderer.render_ascii(spec)
        if path is not None:
            with open(path, "w", encoding="utf-8") as handle:
                handle.write(document)
            debug_print(f"Wrote {spec.format} figure to {path}")
        return document
