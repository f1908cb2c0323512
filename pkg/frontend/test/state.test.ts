import { describe, expect, it } from "vitest";

import type { AssertRejected, CompletionSet } from "../src/api.js";
import {
  appendLog,
  appendToken,
  answersView,
  bugView,
  canFinish,
  eraseLast,
  groupTokens,
  initialState,
  prefixText,
  rejectedView,
  sentenceText,
  withCompletion,
} from "../src/state.js";

const completion = (tokens: CompletionSet["tokens"],
                    sentenceEnd = false): CompletionSet => ({
  tokens,
  sentence_end: sentenceEnd,
});

describe("editor state", () => {
  it("appends only offered tokens", () => {
    let state = withCompletion(
      initialState(),
      completion([{ surface: "Every", category: "function-word" }]),
    );
    state = appendToken(state, "Every", "function-word");
    expect(prefixText(state)).toBe("Every");
    expect(() => appendToken(state, "class", "noun")).toThrow(/not offered/);
  });

  it("numbers are open-ended within the number category", () => {
    const state = withCompletion(
      initialState(),
      completion([{ surface: "1", category: "number" }]),
    );
    expect(appendToken(state, "437", "number").committed).toEqual(["437"]);
    expect(() => appendToken(state, "many", "number")).toThrow();
  });

  it("erase on an empty prefix is a no-op", () => {
    const state = initialState();
    expect(eraseLast(state)).toBe(state);
  });

  it("erase drops the last token and invalidates completions", () => {
    let state = withCompletion(
      initialState(),
      completion([{ surface: "Every", category: "function-word" }]),
    );
    state = appendToken(state, "Every", "function-word");
    state = eraseLast(state);
    expect(prefixText(state)).toBe("");
    expect(state.pending).toBeNull();
  });

  it("question starters flip the mode and the end mark", () => {
    let state = withCompletion(
      initialState(),
      completion([
        { surface: "Which", category: "function-word" },
        { surface: "Every", category: "function-word" },
      ]),
    );
    state = appendToken(state, "Which", "function-word");
    expect(state.mode).toBe("question");
    expect(sentenceText(state)).toBe("Which?");
    let statement = withCompletion(
      initialState(),
      completion([{ surface: "Every", category: "function-word" }]),
    );
    statement = appendToken(statement, "Every", "function-word");
    expect(sentenceText(statement)).toBe("Every.");
  });

  it("finish is available exactly when the server says so", () => {
    const open = withCompletion(initialState(), completion([], false));
    const closed = withCompletion(initialState(), completion([], true));
    expect(canFinish(open)).toBe(false);
    expect(canFinish(closed)).toBe(true);
  });

  it("groups tokens by category in a stable order", () => {
    const groups = groupTokens(
      completion([
        { surface: "maintains", category: "transitive-verb" },
        { surface: "class", category: "noun" },
        { surface: "Core", category: "proper-name" },
        { surface: "artifact", category: "noun" },
      ]),
    );
    expect(groups.map((g) => g.label)).toEqual(["names", "nouns", "verbs"]);
    expect(groups[1].tokens.map((t) => t.surface)).toEqual([
      "artifact",
      "class",
    ]);
  });
});

describe("result views", () => {
  it("answers render exactly the API payload", () => {
    const view = answersView("Which component is used by Core?", {
      answers: ["Easel", "Events", "Layouts", "Shapes", "Utils"],
    });
    expect(view).toEqual({
      kind: "answers",
      question: "Which component is used by Core?",
      answers: ["Easel", "Events", "Layouts", "Shapes", "Utils"],
    });
  });

  it("rejections keep the server's explanation order", () => {
    const payload: AssertRejected = {
      status: "rejected",
      sentence: "EmergencyHandler is maintained by Brian.",
      violations: [
        {
          statement: "No subclass of Handler is maintained by a member of Group-A.",
          bindings: { v1: "Brian" },
          witnesses: ["Brian"],
          support: [
            { text: "first", provenance: "documented" },
            { text: "second", provenance: "documented" },
            { text: "last", provenance: "interactive" },
          ],
        },
      ],
    };
    const view = rejectedView(payload);
    expect(view.kind).toBe("rejected");
    if (view.kind === "rejected") {
      expect(view.explanation.map((r) => r.text)).toEqual([
        "first",
        "second",
        "last",
      ]);
      expect(view.explanation[2].provenance).toBe("interactive");
    }
  });

  it("a 422 surfaces as a bug banner", () => {
    expect(bugView("editor bug").kind).toBe("bug");
  });

  it("the session log appends only after acceptance", () => {
    const log = appendLog([], { sentence: "Core is a component.",
                                kind: "statement" }, false);
    expect(log).toEqual([]);
    const kept = appendLog(log, { sentence: "Core is a component.",
                                  kind: "statement" }, true);
    expect(kept).toHaveLength(1);
  });
});
