"""SVG rendering of links and developments."""

from tits.alternative.rendering.svg import develop_patch, render_link, render_patch, render_trace, write_svg

__all__ = ["develop_patch", "render_link", "render_patch", "render_trace", "write_svg"]
