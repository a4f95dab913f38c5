// Keystroke-level API calls would hammer the scoring service, so auto-score
// waits for a pause in typing. The floor keeps callers from configuring a
// delay short enough to defeat that purpose.
export const MIN_DELAY_MS = 500;

export class Debouncer {
  private timer: ReturnType<typeof setTimeout> | undefined;
  private readonly action: () => void;
  private readonly delayMs: number;

  constructor(action: () => void, delayMs: number = MIN_DELAY_MS) {
    this.action = action;
    this.delayMs = Math.max(delayMs, MIN_DELAY_MS);
  }

  notify(): void {
    if (this.timer !== undefined) {
      clearTimeout(this.timer);
    }
    this.timer = setTimeout(() => {
      this.timer = undefined;
      this.action();
    }, this.delayMs);
  }

  flush(): void {
    if (this.timer !== undefined) {
      clearTimeout(this.timer);
      this.timer = undefined;
    }
    this.action();
  }

  cancel(): void {
    if (this.timer !== undefined) {
      clearTimeout(this.timer);
      this.timer = undefined;
    }
  }

  get pending(): boolean {
    return this.timer !== undefined;
  }
}
