import { FacetScore, ScoreResponse } from "./types.js";

export interface DraftSnapshot {
  text: string;
  hasImage: boolean;
  hasVideo: boolean;
}

export interface Revision {
  snapshot: DraftSnapshot;
  response: ScoreResponse;
}

export interface FacetDelta {
  facet: string;
  before: FacetScore;
  after: FacetScore;
  scoreDelta: number;
  percentileDelta: number;
}

export class DraftSession {
  text = "";
  hasImage = false;
  hasVideo = false;

  private readonly revisions: Revision[] = [];
  private issued = 0;
  private lastAccepted = 0;

  get history(): readonly Revision[] {
    return this.revisions;
  }

  get latest(): Revision | undefined {
    return this.revisions[this.revisions.length - 1];
  }

  snapshot(): DraftSnapshot {
    return { text: this.text, hasImage: this.hasImage, hasVideo: this.hasVideo };
  }

  nextSequence(): number {
    this.issued += 1;
    return this.issued;
  }

  // A response for a sequence at or below the newest accepted one belongs to
  // a superseded draft; dropping it keeps the panels from flickering back to
  // stale numbers when requests complete out of order.
  accept(sequence: number, snapshot: DraftSnapshot, response: ScoreResponse): boolean {
    if (sequence <= this.lastAccepted) {
      return false;
    }
    this.lastAccepted = sequence;
    this.revisions.push({ snapshot, response });
    return true;
  }

  canCompare(i: number, j: number): boolean {
    return (
      Number.isInteger(i) &&
      Number.isInteger(j) &&
      i >= 0 &&
      j >= 0 &&
      i < this.revisions.length &&
      j < this.revisions.length
    );
  }

  compare(i: number, j: number): FacetDelta[] | null {
    if (!this.canCompare(i, j)) {
      return null;
    }
    const before = this.revisions[i].response.facets;
    const after = this.revisions[j].response.facets;
    const facets = Object.keys(before).filter((facet) => facet in after);
    return facets.map((facet) => ({
      facet,
      before: before[facet],
      after: after[facet],
      scoreDelta: after[facet].score - before[facet].score,
      percentileDelta: after[facet].percentile - before[facet].percentile,
    }));
  }
}
