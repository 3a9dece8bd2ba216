/** File-level rendering: locate an experiment's CSVs and emit SVG images. */

import { readFileSync, writeFileSync, mkdirSync } from "node:fs";
import { join } from "node:path";

import {
  FigureRecipe,
  recipeFor,
  renderBars,
  renderDominanceMap,
  renderLines,
  renderTable,
} from "./charts.js";
import {
  SchemaError,
  TRACE_HEADER,
  parseRanksCsv,
  parseSweepCsv,
  parseTraceCsv,
} from "./schema.js";

export function renderCsvText(text: string, recipe: FigureRecipe): string {
  switch (recipe.kind) {
    case "bars":
      return renderBars(parseRanksCsv(text), recipe);
    case "dominance-map":
      return renderDominanceMap(parseSweepCsv(text), recipe);
    case "table":
      return renderTable(parseTraceCsv(text), recipe, TRACE_HEADER);
    default:
      return renderLines(parseSweepCsv(text), recipe);
  }
}

export interface RenderResult {
  written: string[];
}

/**
 * Render one experiment from `inDir` into `outDir`.
 *
 * Bar-chart recipes read the companion `<experiment>_ranks.csv`; the main
 * sweep file is still schema-checked so a malformed dataset fails loudly.
 */
export function renderExperiment(
  experiment: string,
  inDir: string,
  outDir: string,
): RenderResult {
  const recipe = recipeFor(experiment);
  const mainPath = join(inDir, `${experiment}.csv`);
  const mainText = readFileSync(mainPath, "utf-8");
  let svg: string;
  if (recipe.kind === "bars") {
    parseSweepCsv(mainText);
    const ranksText = readFileSync(join(inDir, `${experiment}_ranks.csv`), "utf-8");
    svg = renderCsvText(ranksText, recipe);
  } else {
    svg = renderCsvText(mainText, recipe);
  }
  mkdirSync(outDir, { recursive: true });
  const outPath = join(outDir, `${experiment}.svg`);
  writeFileSync(outPath, svg, "utf-8");
  return { written: [outPath] };
}

export { SchemaError };
