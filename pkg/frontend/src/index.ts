export { RECIPES, recipeFor, buildSeries } from "./charts.js";
export type { FigureRecipe, ChartKind } from "./charts.js";
export { renderCsvText, renderExperiment } from "./render.js";
export {
  SchemaError,
  parseSweepCsv,
  parseRanksCsv,
  parseTraceCsv,
  SWEEP_HEADER,
  RANKS_HEADER,
  TRACE_HEADER,
} from "./schema.js";
export type { SweepRow, RankRow, TraceRow } from "./schema.js";
