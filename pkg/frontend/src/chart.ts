/** SVG scatter-and-curve rendering for one plot series.
 *
 * Points are drawn exactly as the server sent them; no resampling, no
 * client-side prediction.  Axis corner labels show the extreme data values
 * verbatim.
 */

import type { PlotPayload } from "./api.js";

const SVG_NS = "http://www.w3.org/2000/svg";

export interface ChartOptions {
  width?: number;
  height?: number;
  margin?: number;
}

interface Range {
  min: number;
  max: number;
}

function rangeOf(values: number[]): Range {
  let min = Infinity;
  let max = -Infinity;
  for (const v of values) {
    if (v < min) min = v;
    if (v > max) max = v;
  }
  return { min, max };
}

function scale(range: Range, size: number, margin: number, flip: boolean) {
  const span = range.max - range.min;
  return (v: number) => {
    const t = span === 0 ? 0.5 : (v - range.min) / span;
    const u = flip ? 1 - t : t;
    return margin + u * (size - 2 * margin);
  };
}

export function renderChart(
  doc: Document,
  series: PlotPayload,
  options: ChartOptions = {},
): SVGSVGElement {
  const width = options.width ?? 640;
  const height = options.height ?? 360;
  const margin = options.margin ?? 42;

  const xs = series.scatter.map((p) => p[0]).concat(series.curve.map((p) => p[0]));
  const ys = series.scatter.map((p) => p[1]).concat(series.curve.map((p) => p[1]));
  const xRange = rangeOf(xs);
  const yRange = rangeOf(ys);
  const toX = scale(xRange, width, margin, false);
  const toY = scale(yRange, height, margin, true);

  const svg = doc.createElementNS(SVG_NS, "svg") as SVGSVGElement;
  svg.setAttribute("viewBox", `0 0 ${width} ${height}`);
  svg.setAttribute("class", "chart");
  svg.setAttribute("role", "img");

  const frame = doc.createElementNS(SVG_NS, "rect");
  frame.setAttribute("x", String(margin));
  frame.setAttribute("y", String(margin));
  frame.setAttribute("width", String(width - 2 * margin));
  frame.setAttribute("height", String(height - 2 * margin));
  frame.setAttribute("class", "chart-frame");
  svg.appendChild(frame);

  for (const [px, py] of series.scatter) {
    const dot = doc.createElementNS(SVG_NS, "circle");
    dot.setAttribute("cx", String(toX(px)));
    dot.setAttribute("cy", String(toY(py)));
    dot.setAttribute("r", "2.5");
    dot.setAttribute("class", "chart-point");
    svg.appendChild(dot);
  }

  if (series.curve.length > 0) {
    const line = doc.createElementNS(SVG_NS, "polyline");
    line.setAttribute(
      "points",
      series.curve.map(([px, py]) => `${toX(px)},${toY(py)}`).join(" "),
    );
    line.setAttribute("class", "chart-curve");
    line.setAttribute("fill", "none");
    svg.appendChild(line);
  }

  const labels: Array<[string, number, number, string]> = [
    [series.feature, width / 2, height - 6, "chart-axis-name"],
    [series.label, 12, height / 2, "chart-axis-name chart-axis-vertical"],
    [String(xRange.min), margin, height - margin + 16, "chart-tick"],
    [String(xRange.max), width - margin, height - margin + 16, "chart-tick"],
    [String(yRange.min), margin - 6, height - margin, "chart-tick chart-tick-y"],
    [String(yRange.max), margin - 6, margin, "chart-tick chart-tick-y"],
  ];
  for (const [text, x, y, cls] of labels) {
    const node = doc.createElementNS(SVG_NS, "text");
    node.setAttribute("x", String(x));
    node.setAttribute("y", String(y));
    node.setAttribute("class", cls);
    node.textContent = text;
    svg.appendChild(node);
  }

  if (series.degenerate) {
    const note = doc.createElementNS(SVG_NS, "text");
    note.setAttribute("x", String(width / 2));
    note.setAttribute("y", String(margin - 8));
    note.setAttribute("class", "chart-degenerate");
    note.textContent = "single feature value: curve collapses to a point";
    svg.appendChild(note);
  }

  return svg;
}
