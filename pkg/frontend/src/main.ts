import { ApiError, ScoreClient } from "./api.js";
import { Debouncer } from "./debounce.js";
import {
  renderComparison,
  renderContributions,
  renderGauge,
  renderRadar,
  renderSuggestions,
} from "./render.js";
import { DraftSession } from "./session.js";
import { ScoreResponse } from "./types.js";

declare global {
  interface Window {
    SNQAM_API_BASE?: string;
  }
}

function byId<T extends HTMLElement>(id: string): T {
  const element = document.getElementById(id);
  if (element === null) {
    throw new Error(`missing element #${id}`);
  }
  return element as T;
}

const client = new ScoreClient(window.SNQAM_API_BASE ?? "");
const session = new DraftSession();

const editor = byId<HTMLTextAreaElement>("draft");
const hasImageBox = byId<HTMLInputElement>("has-image");
const hasVideoBox = byId<HTMLInputElement>("has-video");
const scoreButton = byId<HTMLButtonElement>("score-now");
const statusLine = byId<HTMLSpanElement>("status");
const banner = byId<HTMLDivElement>("banner");
const modelInfoLine = byId<HTMLSpanElement>("model-info");
const gaugePanel = byId<HTMLDivElement>("gauge");
const radarPanel = byId<HTMLDivElement>("radar");
const contributionsPanel = byId<HTMLDivElement>("contributions");
const suggestionsPanel = byId<HTMLDivElement>("suggestions");
const beforeSelect = byId<HTMLSelectElement>("compare-before");
const afterSelect = byId<HTMLSelectElement>("compare-after");
const compareButton = byId<HTMLButtonElement>("compare");
const comparisonPanel = byId<HTMLDivElement>("comparison");

let inFlight = false;
let rescoreQueued = false;

function showBanner(message: string): void {
  banner.textContent = message;
  banner.hidden = false;
}

function hideBanner(): void {
  banner.hidden = true;
}

function renderLatest(response: ScoreResponse): void {
  gaugePanel.innerHTML = renderGauge(response);
  radarPanel.innerHTML = renderRadar(response);
  contributionsPanel.innerHTML = renderContributions(response);
  suggestionsPanel.innerHTML = renderSuggestions(response);
}

function refreshCompareControls(): void {
  const count = session.history.length;
  for (const select of [beforeSelect, afterSelect]) {
    select.innerHTML = "";
    session.history.forEach((revision, i) => {
      const option = document.createElement("option");
      option.value = String(i);
      option.textContent = `#${i + 1} · ${String(revision.response.quality_score)}`;
      select.append(option);
    });
  }
  if (count > 0) {
    beforeSelect.value = String(Math.max(count - 2, 0));
    afterSelect.value = String(count - 1);
  }
  beforeSelect.disabled = count === 0;
  afterSelect.disabled = count === 0;
  compareButton.disabled = count === 0;
}

async function scoreNow(): Promise<void> {
  // One request in flight at a time; a request that lands while another is
  // running re-fires with the freshest draft once the current one settles.
  if (inFlight) {
    rescoreQueued = true;
    return;
  }
  inFlight = true;
  statusLine.textContent = "scoring…";
  const sequence = session.nextSequence();
  const snapshot = session.snapshot();
  try {
    const response = await client.score({
      text: snapshot.text,
      has_image: snapshot.hasImage,
      has_video: snapshot.hasVideo,
    });
    if (session.accept(sequence, snapshot, response)) {
      hideBanner();
      renderLatest(response);
      refreshCompareControls();
    }
  } catch (error) {
    // the panels keep the last good result; only the banner reports failure
    if (error instanceof ApiError) {
      showBanner(`${error.code}: ${error.message}`);
    } else {
      showBanner(`network error: ${error instanceof Error ? error.message : String(error)}`);
    }
  } finally {
    statusLine.textContent = "";
    inFlight = false;
    if (rescoreQueued) {
      rescoreQueued = false;
      void scoreNow();
    }
  }
}

const debouncer = new Debouncer(() => {
  void scoreNow();
});

editor.addEventListener("input", () => {
  session.text = editor.value;
  debouncer.notify();
});

hasImageBox.addEventListener("change", () => {
  session.hasImage = hasImageBox.checked;
  debouncer.notify();
});

hasVideoBox.addEventListener("change", () => {
  session.hasVideo = hasVideoBox.checked;
  debouncer.notify();
});

scoreButton.addEventListener("click", () => {
  debouncer.cancel();
  void scoreNow();
});

editor.addEventListener("keydown", (event) => {
  if ((event.ctrlKey || event.metaKey) && event.key === "Enter") {
    debouncer.cancel();
    void scoreNow();
  }
});

compareButton.addEventListener("click", () => {
  const i = Number(beforeSelect.value);
  const j = Number(afterSelect.value);
  const deltas = session.compare(i, j);
  if (deltas === null) {
    comparisonPanel.innerHTML = `<p class="empty-note">Score at least one revision, then pick two to compare.</p>`;
    return;
  }
  const triggering = [
    ...new Set(session.history[j].response.suggestions.flatMap((s) => s.features)),
  ];
  comparisonPanel.innerHTML = renderComparison(deltas, triggering, {
    before: `#${i + 1}`,
    after: `#${j + 1}`,
  });
});

async function loadModelInfo(): Promise<void> {
  try {
    const info = await client.model();
    modelInfoLine.textContent = `model v${String(info.model_version)} · seed ${String(info.seed)} · ${String(info.feature_count)} features`;
  } catch {
    modelInfoLine.textContent = "scoring service unreachable";
  }
}

refreshCompareControls();
void loadModelInfo();
