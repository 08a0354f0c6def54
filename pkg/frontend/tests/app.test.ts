// @vitest-environment jsdom
import { afterEach, beforeEach, describe, expect, it, vi } from "vitest";

import { AnalysisResult } from "../src/api.js";
import { App, mount } from "../src/app.js";

const RESULT: AnalysisResult = {
  readability: {
    gunning_fog: 14.0,
    flesch_reading_ease: 59.64,
    coleman_liau: 7.12,
    automated_readability: 8.12,
    final_result: 22.22,
    stats: {
      sentence_count: 1,
      word_count: 20,
      character_count: 83,
      syllable_count: 30,
      complex_word_count: 3,
    },
  },
  story_points: 4.7,
  recommendation: {
    text: "Consider adding acceptance criteria.",
    source: "remote-llm",
    latency_ms: 120,
  },
  timings_ms: { readability: 1, estimation: 1, recommendation: 120 },
};

function okResponse(body: unknown): Response {
  return new Response(JSON.stringify(body), {
    status: 200,
    headers: { "Content-Type": "application/json" },
  });
}

describe("App", () => {
  let app: App;
  let fetchMock: ReturnType<typeof vi.fn>;

  beforeEach(() => {
    fetchMock = vi.fn();
    vi.stubGlobal("fetch", fetchMock);
    document.body.innerHTML = '<div id="app"></div>';
    app = mount(document.getElementById("app")!);
  });

  afterEach(() => {
    vi.unstubAllGlobals();
  });

  function setDraft(text: string) {
    const input = document.getElementById("story-input") as HTMLTextAreaElement;
    input.value = text;
    input.dispatchEvent(new Event("input"));
  }

  it("renders four metric cards, Final Result, estimate, and labeled recommendation", async () => {
    fetchMock.mockResolvedValue(okResponse(RESULT));
    setDraft("As a user, I want login, so that I can see my data");
    await app.submit();

    const cards = document.querySelectorAll(".metric-card");
    expect(cards).toHaveLength(5); // four indexes + Final Result
    const labels = [...document.querySelectorAll(".metric-label")].map((n) => n.textContent);
    expect(labels).toContain("Gunning Fog");
    expect(labels).toContain("Flesch Reading Ease");
    expect(labels).toContain("Coleman-Liau");
    expect(labels).toContain("Automated Readability");
    expect(labels).toContain("Final Result");
    expect(document.querySelector(".metric-card.final .metric-value")!.textContent).toBe("22.22");
    expect(document.querySelector(".estimate-value")!.textContent).toContain("4.7");
    expect(document.querySelector(".source-badge")!.textContent).toBe("LLM");
  });

  it("labels offline recommendations distinctly", async () => {
    fetchMock.mockResolvedValue(
      okResponse({
        ...RESULT,
        recommendation: { ...RESULT.recommendation, source: "offline-heuristic" },
      }),
    );
    setDraft("Fix the bug");
    await app.submit();
    expect(document.querySelector(".source-badge")!.textContent).toBe("Offline heuristic");
  });

  it("displays exactly the values returned by the API", async () => {
    fetchMock.mockResolvedValue(okResponse(RESULT));
    setDraft("story");
    await app.submit();
    const values = [...document.querySelectorAll(".metric-value")].map((n) => n.textContent);
    expect(values).toEqual(["14.00", "59.64", "7.12", "8.12", "22.22"]);
  });

  it("never issues a request for empty input", async () => {
    setDraft("   ");
    await app.submit();
    expect(fetchMock).not.toHaveBeenCalled();
    expect(document.querySelector(".error-banner")!.closest("[hidden]")).toBeNull();
  });

  it("shows a dismissible banner and preserves the draft on server failure", async () => {
    fetchMock.mockRejectedValue(new TypeError("network down"));
    const draft = "As a user, I want login";
    setDraft(draft);
    await app.submit();

    const banner = document.querySelector(".error-banner") as HTMLElement;
    expect(banner.hidden).toBe(false);
    const input = document.getElementById("story-input") as HTMLTextAreaElement;
    expect(input.value).toBe(draft);
    expect(app.view.history).toHaveLength(0);

    (banner.querySelector("button.dismiss") as HTMLButtonElement).click();
    expect(banner.hidden).toBe(true);
  });

  it("appends to history only on success, in order", async () => {
    fetchMock.mockResolvedValue(okResponse(RESULT));
    setDraft("first draft");
    await app.submit();
    fetchMock.mockResolvedValue(
      okResponse({
        ...RESULT,
        readability: { ...RESULT.readability, final_result: 30.5 },
      }),
    );
    setDraft("second draft");
    await app.submit();
    fetchMock.mockRejectedValue(new TypeError("boom"));
    setDraft("third draft");
    await app.submit();

    expect(app.view.history.map((h) => h.finalResult)).toEqual([22.22, 30.5]);
    const items = document.querySelectorAll(".history-list li");
    expect(items).toHaveLength(2);
    expect(items[0].textContent).toContain("first draft");
  });

  it("disables Analyze while a request is in flight", async () => {
    let release: (r: Response) => void;
    fetchMock.mockReturnValue(new Promise<Response>((resolve) => (release = resolve)));
    setDraft("story");
    const pending = app.submit();
    const btn = document.getElementById("analyze-btn") as HTMLButtonElement;
    expect(btn.disabled).toBe(true);
    release!(okResponse(RESULT));
    await pending;
    expect(btn.disabled).toBe(false);
  });

  it("surfaces HTTP error details from the API", async () => {
    fetchMock.mockResolvedValue(
      new Response(JSON.stringify({ error: "story text must be non-empty" }), { status: 400 }),
    );
    setDraft("x");
    await app.submit();
    expect(document.querySelector(".error-text")!.textContent).toContain(
      "story text must be non-empty",
    );
  });
});
