import {
  ApiErrorBody,
  ExtractResponse,
  ModelInfo,
  ScoreRequest,
  ScoreResponse,
} from "./types.js";

export type FetchLike = (input: string, init?: RequestInit) => Promise<Response>;

export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly detail?: Record<string, unknown>;

  constructor(status: number, body: ApiErrorBody) {
    super(body.message);
    this.name = "ApiError";
    this.status = status;
    this.code = body.code;
    this.detail = body.detail;
  }
}

async function errorFromResponse(response: Response): Promise<ApiError> {
  let body: ApiErrorBody;
  try {
    body = (await response.json()) as ApiErrorBody;
    if (typeof body?.code !== "string" || typeof body?.message !== "string") {
      throw new Error("unrecognized error body");
    }
  } catch {
    body = { code: `http_${response.status}`, message: response.statusText || "request failed" };
  }
  return new ApiError(response.status, body);
}

export class ScoreClient {
  private readonly baseUrl: string;
  private readonly fetchFn: FetchLike;

  constructor(baseUrl = "", fetchFn?: FetchLike) {
    this.baseUrl = baseUrl.replace(/\/+$/, "");
    // fetch must be invoked on globalThis or browsers throw "Illegal invocation"
    this.fetchFn = fetchFn ?? ((input, init) => globalThis.fetch(input, init));
  }

  async score(request: ScoreRequest): Promise<ScoreResponse> {
    return this.post<ScoreResponse>("/v1/score", request);
  }

  async extract(request: ScoreRequest): Promise<ExtractResponse> {
    return this.post<ExtractResponse>("/v1/extract", request);
  }

  async model(): Promise<ModelInfo> {
    const response = await this.fetchFn(`${this.baseUrl}/v1/model`);
    if (!response.ok) {
      throw await errorFromResponse(response);
    }
    return (await response.json()) as ModelInfo;
  }

  private async post<T>(path: string, request: ScoreRequest): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, {
      method: "POST",
      headers: { "Content-Type": "application/json" },
      body: JSON.stringify(request),
    });
    if (!response.ok) {
      throw await errorFromResponse(response);
    }
    return (await response.json()) as T;
  }
}
