/** Client for the story tutor HTTP API. */

export interface TextStats {
  sentence_count: number;
  word_count: number;
  character_count: number;
  syllable_count: number;
  complex_word_count: number;
}

export interface Readability {
  gunning_fog: number;
  flesch_reading_ease: number;
  coleman_liau: number;
  automated_readability: number;
  final_result: number;
  stats: TextStats;
}

export interface Recommendation {
  text: string;
  source: "remote-llm" | "offline-heuristic";
  latency_ms: number;
}

export interface AnalysisResult {
  readability: Readability;
  story_points: number;
  recommendation: Recommendation;
  timings_ms: Record<string, number>;
}

export class ApiError extends Error {
  constructor(message: string, public readonly status?: number) {
    super(message);
  }
}

export function apiBaseUrl(): string {
  const configured = (globalThis as { STORYTUTOR_API_URL?: string }).STORYTUTOR_API_URL;
  return (configured ?? "http://127.0.0.1:8000").replace(/\/+$/, "");
}

export async function analyzeStory(text: string): Promise<AnalysisResult> {
  let response: Response;
  try {
    response = await fetch(`${apiBaseUrl()}/analyze`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify({ text }),
    });
  } catch (err) {
    throw new ApiError(`Cannot reach the tutor server: ${String(err)}`);
  }
  if (!response.ok) {
    let detail = `${response.status}`;
    try {
      const body = await response.json();
      if (body && typeof body.error === "string") detail = body.error;
    } catch {
      /* non-JSON error body */
    }
    throw new ApiError(`Analysis failed: ${detail}`, response.status);
  }
  return (await response.json()) as AnalysisResult;
}

export async function checkHealth(): Promise<boolean> {
  try {
    const response = await fetch(`${apiBaseUrl()}/health`);
    return response.ok;
  } catch {
    return false;
  }
}
