/**
 * CSV schema contract shared with the simulation package.
 *
 * Three file shapes exist: sweep results (one row per scenario point),
 * rank-selection tables (fig3 companion file), and the worked-example
 * trace (table2).
 */

export const SWEEP_HEADER = [
  "experiment", "rule", "beta", "m", "n", "N", "r",
  "quality_dist", "type_dist", "replications", "seed",
  "mean_performance", "std_error",
] as const;

export const RANKS_HEADER = [
  "experiment", "rule", "true_rank", "selection_probability",
] as const;

export const TRACE_HEADER = [
  "project", "true_quality", "project_type",
  "perceived_agent1", "perceived_agent2", "perceived_agent3",
  "position_agent1", "position_agent2", "position_agent3",
  "averaging_score", "ranking_score",
] as const;

export interface SweepRow {
  experiment: string;
  rule: string;
  beta: number;
  m: number;
  n: number;
  N: number;
  r: number | null;
  qualityDist: string;
  typeDist: string;
  replications: number;
  seed: number;
  meanPerformance: number;
  stdError: number;
}

export interface RankRow {
  experiment: string;
  rule: string;
  trueRank: number;
  selectionProbability: number;
}

export type TraceRow = Record<(typeof TRACE_HEADER)[number], string>;

export class SchemaError extends Error {}

function splitLines(text: string): string[][] {
  const lines = text.split(/\r?\n/).filter((line) => line.length > 0);
  if (lines.length < 2) {
    throw new SchemaError("CSV has no data rows");
  }
  return lines.map((line) => line.split(","));
}

function checkHeader(actual: string[], expected: readonly string[], what: string): void {
  if (actual.length !== expected.length || actual.some((c, i) => c !== expected[i])) {
    throw new SchemaError(
      `${what} header mismatch: expected "${expected.join(",")}", got "${actual.join(",")}"`,
    );
  }
}

function toNumber(value: string, column: string, line: number): number {
  const parsed = Number(value);
  if (value === "" || Number.isNaN(parsed)) {
    throw new SchemaError(`non-numeric value "${value}" in column ${column}, line ${line}`);
  }
  return parsed;
}

export function parseSweepCsv(text: string): SweepRow[] {
  const [header, ...rows] = splitLines(text);
  checkHeader(header, SWEEP_HEADER, "sweep CSV");
  return rows.map((cells, index) => {
    const line = index + 2;
    if (cells.length !== SWEEP_HEADER.length) {
      throw new SchemaError(`expected ${SWEEP_HEADER.length} columns on line ${line}`);
    }
    return {
      experiment: cells[0],
      rule: cells[1],
      beta: toNumber(cells[2], "beta", line),
      m: toNumber(cells[3], "m", line),
      n: toNumber(cells[4], "n", line),
      N: toNumber(cells[5], "N", line),
      r: cells[6] === "" ? null : toNumber(cells[6], "r", line),
      qualityDist: cells[7],
      typeDist: cells[8],
      replications: toNumber(cells[9], "replications", line),
      seed: toNumber(cells[10], "seed", line),
      meanPerformance: toNumber(cells[11], "mean_performance", line),
      stdError: toNumber(cells[12], "std_error", line),
    };
  });
}

export function parseRanksCsv(text: string): RankRow[] {
  const [header, ...rows] = splitLines(text);
  checkHeader(header, RANKS_HEADER, "rank-table CSV");
  return rows.map((cells, index) => {
    const line = index + 2;
    if (cells.length !== RANKS_HEADER.length) {
      throw new SchemaError(`expected ${RANKS_HEADER.length} columns on line ${line}`);
    }
    return {
      experiment: cells[0],
      rule: cells[1],
      trueRank: toNumber(cells[2], "true_rank", line),
      selectionProbability: toNumber(cells[3], "selection_probability", line),
    };
  });
}

export function parseTraceCsv(text: string): TraceRow[] {
  const [header, ...rows] = splitLines(text);
  checkHeader(header, TRACE_HEADER, "trace CSV");
  return rows.map((cells, index) => {
    if (cells.length !== TRACE_HEADER.length) {
      throw new SchemaError(`expected ${TRACE_HEADER.length} columns on line ${index + 2}`);
    }
    const row = {} as TraceRow;
    TRACE_HEADER.forEach((column, i) => {
      row[column] = cells[i];
    });
    return row;
  });
}
