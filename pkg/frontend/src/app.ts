/** Single-page story tutor UI: editor, Analyze action, result panels,
 * and a session-scoped history of readability across edits. */

import { AnalysisResult, ApiError, analyzeStory } from "./api.js";

export type RequestState = "idle" | "loading" | "error";

export interface HistoryEntry {
  draft: string;
  finalResult: number;
}

export interface AnalysisView {
  draft: string;
  last: AnalysisResult | null;
  state: RequestState;
  error: string | null;
  history: HistoryEntry[];
}

export function initialView(): AnalysisView {
  return { draft: "", last: null, state: "idle", error: null, history: [] };
}

const METRIC_LABELS: Array<[keyof AnalysisResult["readability"] & string, string]> = [
  ["gunning_fog", "Gunning Fog"],
  ["flesch_reading_ease", "Flesch Reading Ease"],
  ["coleman_liau", "Coleman-Liau"],
  ["automated_readability", "Automated Readability"],
];

function el<K extends keyof HTMLElementTagNameMap>(
  tag: K,
  className?: string,
  text?: string,
): HTMLElementTagNameMap[K] {
  const node = document.createElement(tag);
  if (className) node.className = className;
  if (text !== undefined) node.textContent = text;
  return node;
}

function metricCard(label: string, value: number, highlight = false): HTMLElement {
  const card = el("div", highlight ? "metric-card final" : "metric-card");
  card.appendChild(el("div", "metric-label", label));
  card.appendChild(el("div", "metric-value", value.toFixed(2)));
  return card;
}

export class App {
  view: AnalysisView = initialView();

  private readonly textarea: HTMLTextAreaElement;
  private readonly analyzeBtn: HTMLButtonElement;
  private readonly errorBanner: HTMLElement;
  private readonly results: HTMLElement;
  private readonly historyPanel: HTMLElement;

  constructor(private readonly root: HTMLElement) {
    root.innerHTML = "";
    const title = el("h1", undefined, "User Story Tutor");
    this.textarea = el("textarea");
    this.textarea.id = "story-input";
    this.textarea.placeholder = "As a <role>, I want <goal>, so that <benefit>";
    this.textarea.addEventListener("input", () => {
      this.view.draft = this.textarea.value;
    });

    this.analyzeBtn = el("button", "analyze", "Analyze");
    this.analyzeBtn.id = "analyze-btn";
    this.analyzeBtn.addEventListener("click", () => void this.submit());

    this.errorBanner = el("div", "error-banner");
    this.errorBanner.hidden = true;
    const dismiss = el("button", "dismiss", "Dismiss");
    dismiss.addEventListener("click", () => this.clearError());
    this.errorBanner.appendChild(el("span", "error-text"));
    this.errorBanner.appendChild(dismiss);

    this.results = el("div", "results");
    this.historyPanel = el("div", "history");
    this.historyPanel.hidden = true;

    root.append(title, this.textarea, this.analyzeBtn, this.errorBanner, this.results, this.historyPanel);
  }

  async submit(): Promise<void> {
    if (this.view.state === "loading") return;
    const draft = this.textarea.value;
    this.view.draft = draft;
    if (!draft.trim()) {
      this.showError("Please enter a user story before analyzing.");
      return;
    }
    this.view.state = "loading";
    this.analyzeBtn.disabled = true;
    this.clearError();
    try {
      const result = await analyzeStory(draft);
      this.view.last = result;
      this.view.state = "idle";
      this.view.history.push({ draft, finalResult: result.readability.final_result });
      this.renderResult(result);
      this.renderHistory();
    } catch (err) {
      this.view.state = "error";
      const message = err instanceof ApiError ? err.message : `Unexpected error: ${String(err)}`;
      this.showError(message);
    } finally {
      this.analyzeBtn.disabled = false;
    }
  }

  private showError(message: string): void {
    this.view.error = message;
    this.errorBanner.hidden = false;
    const text = this.errorBanner.querySelector(".error-text");
    if (text) text.textContent = message;
  }

  private clearError(): void {
    this.view.error = null;
    this.errorBanner.hidden = true;
  }

  private renderResult(result: AnalysisResult): void {
    this.results.innerHTML = "";

    const recommendation = el("section", "panel recommendation");
    recommendation.appendChild(el("h2", undefined, "Recommendation"));
    const sourceLabel =
      result.recommendation.source === "remote-llm" ? "LLM" : "Offline heuristic";
    recommendation.appendChild(el("span", "source-badge", sourceLabel));
    recommendation.appendChild(el("p", undefined, result.recommendation.text));

    const readability = el("section", "panel readability");
    readability.appendChild(el("h2", undefined, "Readability"));
    const cards = el("div", "metric-grid");
    for (const [key, label] of METRIC_LABELS) {
      cards.appendChild(metricCard(label, result.readability[key] as number));
    }
    cards.appendChild(metricCard("Final Result", result.readability.final_result, true));
    readability.appendChild(cards);

    const estimation = el("section", "panel estimation");
    estimation.appendChild(el("h2", undefined, "Estimation"));
    estimation.appendChild(
      el("div", "estimate-value", `${result.story_points.toFixed(1)} story points`),
    );

    this.results.append(recommendation, readability, estimation);
  }

  private renderHistory(): void {
    this.historyPanel.innerHTML = "";
    if (this.view.history.length === 0) {
      this.historyPanel.hidden = true;
      return;
    }
    this.historyPanel.hidden = false;
    this.historyPanel.appendChild(el("h2", undefined, "Session history (Final Result)"));
    const list = el("ol", "history-list");
    for (const entry of this.view.history) {
      const item = el("li");
      const preview = entry.draft.length > 60 ? `${entry.draft.slice(0, 57)}...` : entry.draft;
      item.textContent = `${entry.finalResult.toFixed(2)} — ${preview}`;
      list.appendChild(item);
    }
    this.historyPanel.appendChild(list);
  }
}

export function mount(root: HTMLElement): App {
  return new App(root);
}
