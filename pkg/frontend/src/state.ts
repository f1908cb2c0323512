/** The editor's pure state machine: committed tokens always form a
 * server-validated prefix, and the only ways forward are appending a
 * token the current completion set offers or erasing the last one.
 * No DOM in here; the UI layer renders whatever this module says. */

import type {
  AskPayload,
  AssertRejected,
  Category,
  CompletionSet,
  CompletionToken,
  SupportEntry,
} from "./api.js";

export type Mode = "statement" | "question";

export interface EditorState {
  committed: string[];
  pending: CompletionSet | null;
  mode: Mode;
  locked: boolean; // network failure: picker disabled until retry
}

export function initialState(): EditorState {
  return { committed: [], pending: null, mode: "statement", locked: false };
}

const QUESTION_STARTERS = new Set(["Which", "What", "which", "what"]);

export function withCompletion(
  state: EditorState,
  completion: CompletionSet,
): EditorState {
  return { ...state, pending: completion, locked: false };
}

export function locked(state: EditorState): EditorState {
  return { ...state, pending: null, locked: true };
}

export function offered(
  state: EditorState,
  surface: string,
  category: Category,
): boolean {
  if (!state.pending) return false;
  if (category === "number") {
    return (
      /^\d+$/.test(surface) &&
      state.pending.tokens.some((t) => t.category === "number")
    );
  }
  return state.pending.tokens.some(
    (t) => t.surface === surface && t.category === category,
  );
}

/** Append a picked token; anything not offered is a caller bug. */
export function appendToken(
  state: EditorState,
  surface: string,
  category: Category,
): EditorState {
  if (!offered(state, surface, category)) {
    throw new Error(`token not offered: ${surface} [${category}]`);
  }
  const mode: Mode =
    state.committed.length === 0 && QUESTION_STARTERS.has(surface)
      ? "question"
      : state.committed.length === 0
        ? "statement"
        : state.mode;
  return {
    ...state,
    committed: [...state.committed, surface],
    pending: null,
    mode,
  };
}

/** Erase the last committed token; a no-op on an empty prefix. */
export function eraseLast(state: EditorState): EditorState {
  if (state.committed.length === 0) return state;
  return { ...state, committed: state.committed.slice(0, -1), pending: null };
}

export function prefixText(state: EditorState): string {
  return state.committed.join(" ");
}

export function sentenceText(state: EditorState): string {
  const mark = state.mode === "question" ? "?" : ".";
  return prefixText(state) + mark;
}

export function canFinish(state: EditorState): boolean {
  return state.pending?.sentence_end ?? false;
}

/** Completion choices grouped for display, stable order within groups. */
export interface TokenGroup {
  label: string;
  category: Category;
  tokens: CompletionToken[];
}

const GROUPS: [Category, string][] = [
  ["function-word", "function words"],
  ["proper-name", "names"],
  ["noun", "nouns"],
  ["transitive-verb", "verbs"],
  ["of-construct", "of-constructs"],
  ["adjective-preposition", "adjectives"],
  ["variable", "variables"],
  ["number", "numbers"],
];

export function groupTokens(completion: CompletionSet): TokenGroup[] {
  const groups: TokenGroup[] = [];
  for (const [category, label] of GROUPS) {
    const tokens = completion.tokens
      .filter((t) => t.category === category)
      .sort((a, b) => a.surface.localeCompare(b.surface));
    if (tokens.length > 0) {
      groups.push({ label, category, tokens });
    }
  }
  return groups;
}

/** What the result pane shows after a submit (or a failure). */
export interface ExplanationRow {
  text: string;
  provenance: SupportEntry["provenance"];
  location?: string | null;
}

export type ResultView =
  | { kind: "answers"; question: string; answers: string[] }
  | { kind: "accepted"; sentence: string }
  | {
      kind: "rejected";
      sentence: string;
      statements: string[];
      explanation: ExplanationRow[];
    }
  | { kind: "untranslatable"; sentence: string; message: string }
  | { kind: "bug"; message: string };

export function answersView(question: string, payload: AskPayload): ResultView {
  // render parity: exactly the API's answer list, order and all
  return { kind: "answers", question, answers: payload.answers };
}

export function acceptedView(sentence: string): ResultView {
  return { kind: "accepted", sentence };
}

export function rejectedView(payload: AssertRejected): ResultView {
  const explanation: ExplanationRow[] = [];
  const seen = new Set<string>();
  for (const violation of payload.violations) {
    for (const entry of violation.support) {
      const key = `${entry.provenance}|${entry.text}`;
      if (!seen.has(key)) {
        seen.add(key);
        explanation.push({
          text: entry.text,
          provenance: entry.provenance,
          location: entry.location,
        });
      }
    }
  }
  return {
    kind: "rejected",
    sentence: payload.sentence,
    statements: payload.violations.map((v) => v.statement),
    explanation,
  };
}

/** Grammatical but inexpressible (an existential consequent): a real
 * user outcome, rendered as a plain verdict. */
export function untranslatableView(
  sentence: string,
  message: string,
): ResultView {
  return { kind: "untranslatable", sentence, message };
}

/** A 422 is unreachable through the picker; seeing one is a bug. */
export function bugView(message: string): ResultView {
  return { kind: "bug", message };
}

export interface LogEntry {
  sentence: string;
  kind: "statement" | "question";
}

/** The session log appends only after server acceptance. */
export function appendLog(
  log: LogEntry[],
  entry: LogEntry,
  accepted: boolean,
): LogEntry[] {
  return accepted ? [...log, entry] : log;
}
