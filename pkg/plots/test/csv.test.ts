import assert from "node:assert/strict";
import { test } from "node:test";

import { CsvFormatError, parseSweepCsv } from "../src/csv.js";

const CURVE = "t,a,value\n0,,1\n0.5,,-0.25\n1,,0.75\n";
const SURFACE = [
  "t,a,value",
  "0,0,0", "1,0,0.1",
  "0,0.5,0.2", "1,0.5,0.3",
  "0,1,0.4", "1,1,0.5",
].join("\n") + "\n";

test("parses a curve with empty a column", () => {
  const table = parseSweepCsv(CURVE, "c.csv");
  assert.equal(table.kind, "curve");
  assert.deepEqual(table.t, [0, 0.5, 1]);
  if (table.kind === "curve") assert.deepEqual(table.values, [1, -0.25, 0.75]);
});

test("parses an a-major surface", () => {
  const table = parseSweepCsv(SURFACE, "s.csv");
  assert.equal(table.kind, "surface");
  if (table.kind === "surface") {
    assert.deepEqual(table.t, [0, 1]);
    assert.deepEqual(table.a, [0, 0.5, 1]);
    assert.deepEqual(table.values, [[0, 0.1], [0.2, 0.3], [0.4, 0.5]]);
  }
});

test("rejects empty input", () => {
  assert.throws(() => parseSweepCsv("", "e.csv"), CsvFormatError);
  assert.throws(() => parseSweepCsv("t,a,value\n", "e.csv"), CsvFormatError);
});

test("rejects a bad header", () => {
  assert.throws(() => parseSweepCsv("theta,a,value\n0,,1\n"), /header/);
});

test("rejects mixed a column", () => {
  assert.throws(() => parseSweepCsv("t,a,value\n0,,1\n1,0.5,2\n"), /mixed/);
});

test("rejects ragged surface blocks", () => {
  const ragged = "t,a,value\n0,0,1\n1,0,2\n0,1,3\n";
  assert.throws(() => parseSweepCsv(ragged), /t axis/);
});

test("rejects non-contiguous a blocks", () => {
  const split = "t,a,value\n0,0,1\n0,1,2\n0,0,3\n";
  assert.throws(() => parseSweepCsv(split), /contiguous/);
});

test("rejects non-numeric entries and wrong column counts", () => {
  assert.throws(() => parseSweepCsv("t,a,value\nx,,1\n"), /non-numeric/);
  assert.throws(() => parseSweepCsv("t,a,value\n0,,\n"), /non-numeric/);
  assert.throws(() => parseSweepCsv("t,a,value\n0,1\n"), /3 columns/);
});
