import { describe, expect, it } from "vitest";
import {
  SelectionState,
  canTrain,
  clearLabel,
  createSelection,
  exclusionHolds,
  selectedFeatures,
  setLabel,
  toggleFeature,
} from "../src/state.js";

const COLUMNS = ["a", "b", "c", "d"];

// deterministic PRNG for the random-walk test (mulberry32)
function prng(seed: number): () => number {
  let s = seed >>> 0;
  return () => {
    s = (s + 0x6d2b79f5) >>> 0;
    let t = s;
    t = Math.imul(t ^ (t >>> 15), t | 1);
    t ^= t + Math.imul(t ^ (t >>> 7), t | 61);
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

describe("selection basics", () => {
  it("starts empty and untrainable", () => {
    const s = createSelection(COLUMNS);
    expect(s.features.size).toBe(0);
    expect(s.label).toBeNull();
    expect(canTrain(s)).toBe(false);
  });

  it("toggle adds then removes a feature", () => {
    let s = createSelection(COLUMNS);
    s = toggleFeature(s, "b");
    expect(s.features.has("b")).toBe(true);
    s = toggleFeature(s, "b");
    expect(s.features.has("b")).toBe(false);
  });

  it("unknown column is a no-op", () => {
    const s = createSelection(COLUMNS);
    expect(toggleFeature(s, "nope")).toBe(s);
    expect(setLabel(s, "nope")).toBe(s);
  });

  it("needs a label and at least one feature to train", () => {
    let s = createSelection(COLUMNS);
    s = toggleFeature(s, "a");
    expect(canTrain(s)).toBe(false);
    s = setLabel(s, "d");
    expect(canTrain(s)).toBe(true);
    s = clearLabel(s);
    expect(canTrain(s)).toBe(false);
  });
});

describe("label and feature exclusion", () => {
  it("labelling a selected feature removes it from the features", () => {
    let s = createSelection(COLUMNS);
    s = toggleFeature(s, "c");
    s = setLabel(s, "c");
    expect(s.label).toBe("c");
    expect(s.features.has("c")).toBe(false);
  });

  it("selecting the label column as a feature steals the label", () => {
    let s = createSelection(COLUMNS);
    s = setLabel(s, "b");
    s = toggleFeature(s, "b");
    expect(s.features.has("b")).toBe(true);
    expect(s.label).toBeNull();
  });

  it("holds under any random click sequence", () => {
    const rand = prng(20260826);
    for (let run = 0; run < 50; run++) {
      let s = createSelection(COLUMNS);
      for (let step = 0; step < 40; step++) {
        const col = COLUMNS[Math.floor(rand() * COLUMNS.length)] as string;
        if (rand() < 0.5) {
          s = toggleFeature(s, col);
        } else {
          s = setLabel(s, col);
        }
        expect(exclusionHolds(s)).toBe(true);
        for (const f of s.features) expect(COLUMNS).toContain(f);
        if (s.label !== null) expect(COLUMNS).toContain(s.label);
      }
    }
  });
});

describe("feature ordering", () => {
  it("follows dataset column order, not click order", () => {
    let s = createSelection(COLUMNS);
    s = toggleFeature(s, "d");
    s = toggleFeature(s, "a");
    s = toggleFeature(s, "c");
    expect(selectedFeatures(s)).toEqual(["a", "c", "d"]);
  });

  it("state values are not mutated in place", () => {
    const s0 = createSelection(COLUMNS);
    const s1 = toggleFeature(s0, "a");
    expect(s0.features.size).toBe(0);
    expect(s1.features.size).toBe(1);
    const s2: SelectionState = setLabel(s1, "b");
    expect(s1.label).toBeNull();
    expect(s2.label).toBe("b");
  });
});
