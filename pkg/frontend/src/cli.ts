#!/usr/bin/env node
/** CLI: `figure-gen render <experiment> --in DIR --out DIR [--format svg]`. */

import { parseArgs } from "node:util";

import { renderExperiment } from "./render.js";
import { SchemaError } from "./schema.js";

const USAGE =
  "usage: figure-gen render <experiment> --in <dir> --out <dir> [--format svg]";

export function main(argv: string[]): number {
  let parsed;
  try {
    parsed = parseArgs({
      args: argv,
      allowPositionals: true,
      options: {
        in: { type: "string", default: "." },
        out: { type: "string", default: "." },
        format: { type: "string", default: "svg" },
      },
    });
  } catch (error) {
    console.error(String(error instanceof Error ? error.message : error));
    console.error(USAGE);
    return 2;
  }
  const [command, experiment] = parsed.positionals;
  if (command !== "render" || !experiment) {
    console.error(USAGE);
    return 2;
  }
  if (parsed.values.format !== "svg") {
    console.error(
      `unsupported format "${parsed.values.format}": this build emits vector svg only`,
    );
    return 2;
  }
  try {
    const result = renderExperiment(
      experiment,
      parsed.values.in as string,
      parsed.values.out as string,
    );
    for (const path of result.written) {
      console.log(path);
    }
    return 0;
  } catch (error) {
    if (error instanceof SchemaError) {
      console.error(`schema error: ${error.message}`);
      return 1;
    }
    if (error instanceof Error && "code" in error && error.code === "ENOENT") {
      console.error(`missing input file: ${error.message}`);
      return 1;
    }
    throw error;
  }
}

process.exitCode = main(process.argv.slice(2));
