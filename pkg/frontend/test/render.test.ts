import { existsSync, mkdtempSync, readFileSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { describe, expect, it } from "vitest";

import { RECIPES, recipeFor } from "../src/charts.js";
import { renderExperiment } from "../src/render.js";
import { parseSweepCsv } from "../src/schema.js";

const FIXTURES = join(__dirname, "fixtures");
const EXPERIMENTS = Object.keys(RECIPES);

function render(experiment: string): string {
  const outDir = mkdtempSync(join(tmpdir(), "figure-gen-"));
  const result = renderExperiment(experiment, FIXTURES, outDir);
  expect(result.written).toHaveLength(1);
  expect(existsSync(result.written[0])).toBe(true);
  return readFileSync(result.written[0], "utf-8");
}

describe("rendering every builtin experiment", () => {
  for (const experiment of EXPERIMENTS) {
    it(`renders ${experiment} without error`, () => {
      const svg = render(experiment);
      expect(svg.startsWith("<svg")).toBe(true);
      expect(svg.trimEnd().endsWith("</svg>")).toBe(true);
    });
  }
});

describe("series coverage", () => {
  const lineExperiments = EXPERIMENTS.filter(
    (name) => recipeFor(name).kind === "lines" && name !== "fig10",
  );
  for (const experiment of lineExperiments) {
    it(`${experiment} plots one series per rule`, () => {
      const rows = parseSweepCsv(readFileSync(join(FIXTURES, `${experiment}.csv`), "utf-8"));
      const rules = new Set(rows.map((r) => r.rule));
      const svg = render(experiment);
      for (const rule of rules) {
        expect(svg).toContain(`>${rule}`);
      }
      const polylines = svg.match(/<polyline /g) ?? [];
      expect(polylines.length).toBeGreaterThanOrEqual(rules.size);
    });
  }

  it("fig3 draws paired bars for both rules", () => {
    const svg = render("fig3");
    expect(svg).toContain(">ranking<");
    expect(svg).toContain(">averaging<");
    const bars = svg.match(/<rect /g) ?? [];
    // 10 ranks x 2 rules, plus the background rectangle
    expect(bars.length).toBeGreaterThanOrEqual(21);
  });

  it("fig4a colors every (m, n) cell by its winner", () => {
    const svg = render("fig4a");
    expect(svg).toContain("wins");
    const cells = svg.match(/<rect /g) ?? [];
    expect(cells.length).toBeGreaterThan(10);
  });

  it("fig2a shades the delegation error band", () => {
    const svg = render("fig2a");
    expect(svg).toContain("<polygon");
  });
});

describe("idempotency", () => {
  it("produces identical svg for identical input", () => {
    expect(render("fig6a")).toBe(render("fig6a"));
  });
});
