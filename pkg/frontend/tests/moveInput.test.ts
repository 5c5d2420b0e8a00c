import { describe, expect, it } from "vitest";
import { MoveInput } from "../src/moveInput.js";

describe("MoveInput placements", () => {
  it("submits on the first click of a legal cell", () => {
    const input = new MoveInput(["a1", "b2", "c3"]);
    expect(input.origins()).toEqual(new Set(["a1", "b2", "c3"]));
    expect(input.click("b2")).toEqual({ kind: "submit", text: "b2" });
    expect(input.selection()).toEqual([]);
  });

  it("ignores cells that start no move", () => {
    const input = new MoveInput(["a1", "b2"]);
    expect(input.click("c3")).toEqual({ kind: "ignored" });
  });
});

describe("MoveInput steps", () => {
  it("selects an origin, then submits on the target", () => {
    const input = new MoveInput(["a1-b2", "a1-a2", "c1-b2"]);
    expect(input.click("a1")).toEqual({ kind: "pending" });
    expect(input.selection()).toEqual(["a1"]);
    expect(input.targets()).toEqual(new Set(["b2", "a2"]));
    expect(input.click("b2")).toEqual({ kind: "submit", text: "a1-b2" });
  });

  it("switches the selection when another origin is clicked", () => {
    const input = new MoveInput(["a1-a2", "c1-c2"]);
    input.click("a1");
    expect(input.click("c1")).toEqual({ kind: "pending" });
    expect(input.selection()).toEqual(["c1"]);
    expect(input.targets()).toEqual(new Set(["c2"]));
  });

  it("clears when the click is neither a target nor an origin", () => {
    const input = new MoveInput(["a1-a2"]);
    input.click("a1");
    expect(input.click("e5")).toEqual({ kind: "cleared" });
    expect(input.selection()).toEqual([]);
  });

  it("can be reset midway", () => {
    const input = new MoveInput(["a1-a2"]);
    input.click("a1");
    input.reset();
    expect(input.selection()).toEqual([]);
    expect(input.targets()).toEqual(new Set());
  });
});

describe("MoveInput jump chains", () => {
  const LEGAL = ["a1xa3", "a1xa3xa5", "b1-b2"];

  it("offers hops and completes an unambiguous chain", () => {
    const input = new MoveInput(["c3xc5xe5"]);
    expect(input.click("c3")).toEqual({ kind: "pending" });
    expect(input.targets()).toEqual(new Set(["c5"]));
    expect(input.click("c5")).toEqual({ kind: "pending" });
    expect(input.click("e5")).toEqual({ kind: "submit", text: "c3xc5xe5" });
  });

  it("holds a playable prefix open while longer chains exist", () => {
    const input = new MoveInput(LEGAL);
    input.click("a1");
    expect(input.click("a3")).toEqual({ kind: "pending" });
    expect(input.pendingText()).toBe("a1xa3");
    expect(input.needsConfirm()).toBe(true);
    expect(input.targets()).toEqual(new Set(["a5"]));
  });

  it("confirm plays the shorter chain", () => {
    const input = new MoveInput(LEGAL);
    input.click("a1");
    input.click("a3");
    expect(input.confirm()).toEqual({ kind: "submit", text: "a1xa3" });
    expect(input.selection()).toEqual([]);
  });

  it("extending past the fork submits the longer chain", () => {
    const input = new MoveInput(LEGAL);
    input.click("a1");
    input.click("a3");
    expect(input.click("a5")).toEqual({ kind: "submit", text: "a1xa3xa5" });
  });

  it("confirm without a complete selection is ignored", () => {
    const input = new MoveInput(LEGAL);
    expect(input.confirm()).toEqual({ kind: "ignored" });
    input.click("a1");
    expect(input.confirm()).toEqual({ kind: "ignored" });
  });
});

describe("MoveInput passing", () => {
  it("exposes pass separately from cell input", () => {
    const input = new MoveInput(["pass"]);
    expect(input.canPass()).toBe(true);
    expect(input.passText()).toBe("pass");
    expect(input.origins()).toEqual(new Set());
    expect(input.click("a1")).toEqual({ kind: "ignored" });
  });

  it("reports no pass when moves exist", () => {
    const input = new MoveInput(["c4", "d3"]);
    expect(input.canPass()).toBe(false);
    expect(input.passText()).toBeNull();
  });
});

describe("MoveInput with no legal moves", () => {
  it("ignores every click", () => {
    const input = new MoveInput([]);
    expect(input.click("a1")).toEqual({ kind: "ignored" });
    expect(input.origins()).toEqual(new Set());
    expect(input.needsConfirm()).toBe(false);
  });
});
