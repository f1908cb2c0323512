/** DOM wiring for the predictive editor: renders completion groups as
 * buttons, maintains the sentence bar and session log, and funnels every
 * submit through the API. Free text never enters a sentence; the only
 * text input adds a new lexicon entry via POST /lexicon. */

import { ApiError, WorkbenchApi } from "./api.js";
import type { AssertRejected } from "./api.js";
import {
  appendLog,
  appendToken,
  acceptedView,
  answersView,
  bugView,
  untranslatableView,
  canFinish,
  eraseLast,
  groupTokens,
  initialState,
  locked,
  prefixText,
  rejectedView,
  sentenceText,
  withCompletion,
  type EditorState,
  type LogEntry,
  type ResultView,
} from "./state.js";

const api = new WorkbenchApi("");
let state: EditorState = initialState();
let log: LogEntry[] = [];

function el(id: string): HTMLElement {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing #${id}`);
  return node;
}

async function refreshCompletions(): Promise<void> {
  try {
    const completion = await api.complete(prefixText(state));
    state = withCompletion(state, completion);
  } catch {
    state = locked(state);
  }
  render();
}

function pick(surface: string, category: string): void {
  state = appendToken(state, surface, category as never);
  void refreshCompletions();
}

async function finish(): Promise<void> {
  const sentence = sentenceText(state);
  const isQuestion = state.mode === "question";
  let view: ResultView;
  let accepted = false;
  try {
    if (isQuestion) {
      view = answersView(sentence, await api.ask(sentence));
      accepted = true;
    } else {
      await api.assertSentence(sentence);
      view = acceptedView(sentence);
      accepted = true;
    }
  } catch (error) {
    if (error instanceof ApiError && error.status === 409) {
      view =
        (error.payload as AssertRejected).status === "rejected"
          ? rejectedView(error.payload as AssertRejected)
          : bugView(JSON.stringify(error.payload));
    } else if (
      error instanceof ApiError &&
      error.status === 400 &&
      (error.payload as { kind?: string }).kind === "untranslatable"
    ) {
      view = untranslatableView(
        sentence,
        (error.payload as { error: string }).error,
      );
    } else if (error instanceof ApiError && error.status === 422) {
      // unreachable by construction: the picker only offers valid tokens
      view = bugView("editor bug: the server saw a syntax error");
    } else {
      state = locked(state);
      render();
      return;
    }
  }
  log = appendLog(
    log,
    { sentence, kind: isQuestion ? "question" : "statement" },
    accepted && !isQuestion,
  );
  state = initialState();
  renderResult(view);
  void refreshCompletions();
}

function render(): void {
  el("sentence").textContent = prefixText(state) || "(empty)";
  const picker = el("picker");
  picker.textContent = "";
  el("retry").hidden = !state.locked;
  el("finish").toggleAttribute("disabled", !canFinish(state));
  el("erase").toggleAttribute("disabled", state.committed.length === 0);
  if (!state.pending) return;
  for (const group of groupTokens(state.pending)) {
    const box = document.createElement("fieldset");
    const legend = document.createElement("legend");
    legend.textContent = group.label;
    box.appendChild(legend);
    if (group.category === "number") {
      const input = document.createElement("input");
      input.type = "number";
      input.min = "0";
      const add = document.createElement("button");
      add.textContent = "insert number";
      add.onclick = () => {
        if (/^\d+$/.test(input.value)) pick(input.value, "number");
      };
      box.append(input, add);
    } else {
      for (const token of group.tokens) {
        const button = document.createElement("button");
        button.textContent = token.surface;
        button.onclick = () => pick(token.surface, token.category);
        box.appendChild(button);
      }
    }
    picker.appendChild(box);
  }
  const logList = el("log");
  logList.textContent = "";
  for (const entry of log) {
    const item = document.createElement("li");
    item.textContent = entry.sentence;
    logList.appendChild(item);
  }
}

function renderResult(view: ResultView): void {
  const banner = el("verdict");
  const detail = el("detail");
  detail.textContent = "";
  banner.className = view.kind;
  if (view.kind === "answers") {
    banner.textContent = view.answers.length
      ? `${view.answers.length} answer(s)`
      : "no answers";
    const table = document.createElement("table");
    for (const answer of view.answers) {
      const row = table.insertRow();
      row.insertCell().textContent = answer;
    }
    detail.appendChild(table);
  } else if (view.kind === "accepted") {
    banner.textContent = `accepted: ${view.sentence}`;
  } else if (view.kind === "untranslatable") {
    banner.textContent = `cannot be expressed: ${view.sentence}`;
    const note = document.createElement("p");
    note.textContent = view.message;
    detail.appendChild(note);
  } else if (view.kind === "rejected") {
    banner.textContent = `rejected: ${view.sentence}`;
    const list = document.createElement("ol");
    for (const row of view.explanation) {
      const item = document.createElement("li");
      const badge = document.createElement("span");
      badge.className = `badge ${row.provenance}`;
      badge.textContent = row.provenance;
      item.append(badge, " ", row.text);
      list.appendChild(item);
    }
    detail.appendChild(list);
  } else {
    banner.textContent = view.message;
  }
}

async function addWord(): Promise<void> {
  const input = el("new-word") as HTMLInputElement;
  if (!input.value.trim()) return;
  try {
    await api.addWord(input.value.trim());
    input.value = "";
    await refreshCompletions();
  } catch (error) {
    renderResult(
      bugView(error instanceof ApiError ? JSON.stringify(error.payload)
                                        : String(error)),
    );
  }
}

export function boot(): void {
  el("erase").onclick = () => {
    state = eraseLast(state);
    void refreshCompletions();
  };
  el("finish").onclick = () => void finish();
  el("retry").onclick = () => void refreshCompletions();
  el("add-word").onclick = () => void addWord();
  void refreshCompletions();
}

boot();
