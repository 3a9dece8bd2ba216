/**
 * Figure recipes: which chart shape each experiment dataset gets, and the
 * renderers that turn parsed rows into SVG strings.
 */

import type { RankRow, SweepRow, TraceRow } from "./schema.js";
import { SchemaError } from "./schema.js";
import {
  HEIGHT,
  MARGIN,
  PALETTE,
  SvgBuilder,
  WIDTH,
  extent,
  linearScale,
  padded,
} from "./svg.js";

export type ChartKind = "lines" | "bars" | "dominance-map" | "table";

export interface FigureRecipe {
  experiment: string;
  kind: ChartKind;
  title: string;
  /** sweep column used as the x axis of line charts */
  x: "beta" | "m";
  xLabel: string;
  yLabel: string;
}

const LINE_DEFAULTS = {
  x: "beta" as const,
  xLabel: "knowledge breadth",
  yLabel: "mean portfolio performance",
};

export const RECIPES: Record<string, FigureRecipe> = Object.fromEntries(
  (
    [
      { experiment: "fig2a", kind: "lines", title: "Rule performance, budget 10 of 100", ...LINE_DEFAULTS },
      { experiment: "fig2b", kind: "lines", title: "Rule performance, budget 30 of 100", ...LINE_DEFAULTS },
      { experiment: "fig3", kind: "bars", title: "Selection probability by true quality rank", ...LINE_DEFAULTS, xLabel: "true quality rank", yLabel: "selection probability" },
      { experiment: "fig4a", kind: "dominance-map", title: "Averaging vs Ranking, exact perception", ...LINE_DEFAULTS, xLabel: "number of projects", yLabel: "selectiveness m/n" },
      { experiment: "fig4b", kind: "dominance-map", title: "Averaging vs Ranking, wide breadth", ...LINE_DEFAULTS, xLabel: "number of projects", yLabel: "selectiveness m/n" },
      { experiment: "fig5a", kind: "lines", title: "Partially shifted project types", ...LINE_DEFAULTS },
      { experiment: "fig5b", kind: "lines", title: "Fully shifted project types", ...LINE_DEFAULTS },
      { experiment: "fig6a", kind: "lines", title: "Crowd of 15 vs three experts", ...LINE_DEFAULTS },
      { experiment: "fig6b", kind: "lines", title: "Crowd of 45 vs three experts", ...LINE_DEFAULTS },
      { experiment: "fig8rc", kind: "lines", title: "Batched, random assignment, centralized", ...LINE_DEFAULTS },
      { experiment: "fig8rd", kind: "lines", title: "Batched, random assignment, decentralized", ...LINE_DEFAULTS },
      { experiment: "fig8mc", kind: "lines", title: "Batched, matched assignment, centralized", ...LINE_DEFAULTS },
      { experiment: "fig8md", kind: "lines", title: "Batched, matched assignment, decentralized", ...LINE_DEFAULTS },
      { experiment: "fig10", kind: "lines", title: "Theoretical per-project maxima", ...LINE_DEFAULTS, x: "m", xLabel: "budget m", yLabel: "expected quality per funded project" },
      { experiment: "fig11", kind: "lines", title: "Budget and choice-set sensitivity", ...LINE_DEFAULTS, x: "m", xLabel: "budget m" },
      { experiment: "fig12", kind: "lines", title: "Very small budgets", ...LINE_DEFAULTS },
      { experiment: "fig13", kind: "lines", title: "Alternative quality distributions", ...LINE_DEFAULTS },
      { experiment: "table2", kind: "table", title: "Worked aggregation example", ...LINE_DEFAULTS },
    ] as FigureRecipe[]
  ).map((recipe) => [recipe.experiment, recipe]),
);

export function recipeFor(experiment: string): FigureRecipe {
  return (
    RECIPES[experiment] ?? {
      experiment,
      kind: "lines",
      title: experiment,
      ...LINE_DEFAULTS,
    }
  );
}

interface Series {
  label: string;
  rule: string;
  points: Array<{ x: number; y: number }>;
}

/** Group sweep rows into one series per combination of non-x scenario fields. */
export function buildSeries(rows: SweepRow[], x: "beta" | "m"): Series[] {
  const keyFields = (row: SweepRow): Array<[string, string]> => {
    const fields: Array<[string, string]> = [
      ["rule", row.rule],
      ["r", row.r === null ? "" : String(row.r)],
      ["N", String(row.N)],
      ["n", String(row.n)],
      ["q", row.qualityDist],
      ["t", row.typeDist],
    ];
    if (x !== "m") fields.push(["m", String(row.m)]);
    return fields;
  };
  const groups = new Map<string, { fields: Array<[string, string]>; rows: SweepRow[] }>();
  for (const row of rows) {
    const fields = keyFields(row);
    const key = fields.map(([, v]) => v).join("|");
    const group = groups.get(key) ?? { fields, rows: [] };
    group.rows.push(row);
    groups.set(key, group);
  }
  // label each series by its rule plus whichever fields actually vary
  const varying = new Set<string>();
  const all = [...groups.values()];
  for (const [name] of all[0]?.fields ?? []) {
    const values = new Set(all.map((g) => g.fields.find(([f]) => f === name)?.[1]));
    if (values.size > 1 && name !== "rule") varying.add(name);
  }
  return all.map((group) => {
    const rule = group.rows[0].rule;
    const extras = group.fields
      .filter(([name, value]) => varying.has(name) && value !== "")
      .map(([name, value]) => `${name}=${value}`);
    const points = group.rows
      .map((row) => ({ x: row[x === "beta" ? "beta" : "m"], y: row.meanPerformance }))
      .sort((a, b) => a.x - b.x);
    return { label: [rule, ...extras].join(" "), rule, points };
  });
}

function colorByRule(series: Series[]): Map<string, string> {
  const colors = new Map<string, string>();
  for (const s of series) {
    if (!colors.has(s.rule)) colors.set(s.rule, PALETTE[colors.size % PALETTE.length]);
  }
  return colors;
}

export function renderLines(rows: SweepRow[], recipe: FigureRecipe): string {
  if (rows.length === 0) throw new SchemaError("empty dataset");
  const series = buildSeries(rows, recipe.x);
  const svg = new SvgBuilder();
  const xScale = linearScale(
    extent(series.flatMap((s) => s.points.map((p) => p.x))),
    [MARGIN.left, WIDTH - MARGIN.right],
  );
  const yScale = linearScale(
    padded(extent(series.flatMap((s) => s.points.map((p) => p.y)))),
    [HEIGHT - MARGIN.bottom, MARGIN.top],
  );
  svg.title(recipe.title);
  svg.axes(xScale, yScale, recipe.xLabel, recipe.yLabel);
  const colors = colorByRule(series);

  // rules plotted at several parameter values get a shaded min-max band
  const byRule = new Map<string, Series[]>();
  for (const s of series) {
    byRule.set(s.rule, [...(byRule.get(s.rule) ?? []), s]);
  }
  for (const [rule, group] of byRule) {
    if (group.length < 2 || group[0].points.length < 2) continue;
    const xs = group[0].points.map((p) => p.x);
    if (!group.every((s) => s.points.length === xs.length)) continue;
    const upper = xs.map((x, i) => [xScale(x), yScale(Math.max(...group.map((s) => s.points[i].y)))]);
    const lower = xs.map((x, i) => [xScale(x), yScale(Math.min(...group.map((s) => s.points[i].y)))]);
    const path = [...upper, ...lower.reverse()]
      .map(([px, py]) => `${px.toFixed(2)},${py.toFixed(2)}`)
      .join(" ");
    svg.raw(`<polygon points="${path}" fill="${colors.get(rule)}" fill-opacity="0.12"/>`);
  }

  const dashes = ["", "6,3", "2,3", "8,3,2,3"];
  const seen = new Map<string, number>();
  const legend: Array<{ label: string; color: string; dash?: string }> = [];
  for (const s of series) {
    const variant = seen.get(s.rule) ?? 0;
    seen.set(s.rule, variant + 1);
    const dash = dashes[variant % dashes.length] || undefined;
    const color = colors.get(s.rule)!;
    svg.polyline(s.points.map((p) => [xScale(p.x), yScale(p.y)]), color, dash);
    if (legend.length < 22) legend.push({ label: s.label, color, dash });
  }
  svg.legend(legend);
  return svg.toString();
}

export function renderBars(rows: RankRow[], recipe: FigureRecipe): string {
  if (rows.length === 0) throw new SchemaError("empty dataset");
  const rules = [...new Set(rows.map((r) => r.rule))];
  const ranks = [...new Set(rows.map((r) => r.trueRank))].sort((a, b) => a - b);
  const svg = new SvgBuilder();
  svg.title(recipe.title);
  const x0 = MARGIN.left;
  const x1 = WIDTH - MARGIN.right;
  const y0 = HEIGHT - MARGIN.bottom;
  const yScale = linearScale([0, 1], [y0, MARGIN.top]);
  svg.axes(linearScale([ranks[0], ranks[ranks.length - 1]], [x0, x1]), yScale, recipe.xLabel, recipe.yLabel);
  const slot = (x1 - x0) / ranks.length;
  const barWidth = (slot * 0.8) / rules.length;
  const lookup = new Map(rows.map((r) => [`${r.rule}|${r.trueRank}`, r.selectionProbability]));
  rules.forEach((rule, ri) => {
    ranks.forEach((rank, ki) => {
      const value = lookup.get(`${rule}|${rank}`) ?? 0;
      const px = x0 + ki * slot + slot * 0.1 + ri * barWidth;
      svg.rect(px, yScale(value), barWidth - 1, y0 - yScale(value), PALETTE[ri % PALETTE.length], 0.9);
    });
  });
  ranks.forEach((rank, ki) => {
    svg.text(x0 + ki * slot + slot / 2, y0 + 18, String(rank), { anchor: "middle" });
  });
  svg.legend(rules.map((rule, ri) => ({ label: rule, color: PALETTE[ri % PALETTE.length] })));
  return svg.toString();
}

export function renderDominanceMap(rows: SweepRow[], recipe: FigureRecipe): string {
  if (rows.length === 0) throw new SchemaError("empty dataset");
  const rules = [...new Set(rows.map((r) => r.rule))];
  if (rules.length < 2) {
    throw new SchemaError("dominance map needs at least two rules to compare");
  }
  const cells = new Map<string, Map<string, number>>();
  for (const row of rows) {
    const key = `${row.n}|${row.m}`;
    const cell = cells.get(key) ?? new Map<string, number>();
    cell.set(row.rule, row.meanPerformance);
    cells.set(key, cell);
  }
  const ns = [...new Set(rows.map((r) => r.n))].sort((a, b) => a - b);
  const svg = new SvgBuilder();
  svg.title(recipe.title);
  const xScale = linearScale([-0.5, ns.length - 0.5], [MARGIN.left, WIDTH - MARGIN.right]);
  const yScale = linearScale([0, 1.05], [HEIGHT - MARGIN.bottom, MARGIN.top]);
  const x0 = MARGIN.left;
  const y0 = HEIGHT - MARGIN.bottom;
  svg.line(x0, y0, WIDTH - MARGIN.right, y0);
  svg.line(x0, y0, x0, MARGIN.top);
  ns.forEach((n, i) => svg.text(xScale(i), y0 + 18, String(n), { anchor: "middle" }));
  for (const t of [0, 0.25, 0.5, 0.75, 1]) {
    svg.text(x0 - 8, yScale(t) + 4, String(t), { anchor: "end" });
    svg.line(x0 - 5, yScale(t), x0, yScale(t));
  }
  svg.text((x0 + WIDTH - MARGIN.right) / 2, HEIGHT - 14, recipe.xLabel, { anchor: "middle" });
  svg.text(18, (y0 + MARGIN.top) / 2, recipe.yLabel, { anchor: "middle", rotate: -90 });
  const cellW = (WIDTH - MARGIN.left - MARGIN.right) / ns.length;
  for (const [key, cell] of cells) {
    const [n, m] = key.split("|").map(Number);
    let winner = rules[0];
    for (const rule of rules) {
      if ((cell.get(rule) ?? -Infinity) > (cell.get(winner) ?? -Infinity)) winner = rule;
    }
    const color = PALETTE[rules.indexOf(winner) % PALETTE.length];
    const px = xScale(ns.indexOf(n)) - cellW * 0.4;
    svg.rect(px, yScale(m / n) - 7, cellW * 0.8, 14, color, 0.85);
  }
  svg.legend(rules.map((rule, i) => ({ label: `${rule} wins`, color: PALETTE[i % PALETTE.length] })));
  return svg.toString();
}

export function renderTable(rows: TraceRow[], recipe: FigureRecipe, header: readonly string[]): string {
  if (rows.length === 0) throw new SchemaError("empty dataset");
  const cellW = (WIDTH - 80) / header.length;
  const svg = new SvgBuilder(WIDTH, 120 + rows.length * 26);
  svg.title(recipe.title);
  header.forEach((column, i) => {
    svg.text(40 + i * cellW + cellW / 2, 60, column.replace(/_/g, " "), {
      anchor: "middle",
      size: 9,
      bold: true,
    });
  });
  svg.line(40, 70, WIDTH - 40, 70);
  rows.forEach((row, ri) => {
    header.forEach((column, ci) => {
      svg.text(40 + ci * cellW + cellW / 2, 92 + ri * 26, row[column as keyof TraceRow], {
        anchor: "middle",
        size: 11,
      });
    });
  });
  return svg.toString();
}
